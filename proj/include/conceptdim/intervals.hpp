#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace conceptdim {

// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool operator==(const Interval&) const = default;
};

// One description: a closed interval per numeric attribute. Endpoints are
// compared exactly; no tolerances anywhere.
class IntervalTuple {
 public:
  IntervalTuple() = default;
  explicit IntervalTuple(std::vector<Interval> components);
  IntervalTuple(std::initializer_list<Interval> components);

  // Degenerate intervals [v, v] from a point.
  static IntervalTuple point(std::span<const double> values);

  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const Interval& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Interval>& components() const { return components_; }

  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  bool operator==(const IntervalTuple&) const = default;

 private:
  std::vector<Interval> components_;
};

// Component-wise convex hull: [s,t] meet [q,r] = [min(s,q), max(t,r)].
IntervalTuple interval_meet(const IntervalTuple& c, const IntervalTuple& d);

// c subsumes d iff c meet d == c, i.e. every component of d lies inside the
// corresponding component of c.
bool subsumes(const IntervalTuple& c, const IntervalTuple& d);

}  // namespace conceptdim
