#include "conceptdim/intervals.hpp"

#include <cmath>

#include "conceptdim/errors.hpp"

namespace conceptdim {

namespace {

void validate(const std::vector<Interval>& components) {
  for (const Interval& c : components) {
    if (!std::isfinite(c.lo) || !std::isfinite(c.hi))
      throw InvalidInputError("interval endpoints must be finite");
    if (c.lo > c.hi) throw InvalidInputError("interval has lo > hi");
  }
}

}  // namespace

IntervalTuple::IntervalTuple(std::vector<Interval> components)
    : components_(std::move(components)) {
  validate(components_);
}

IntervalTuple::IntervalTuple(std::initializer_list<Interval> components)
    : components_(components) {
  validate(components_);
}

IntervalTuple IntervalTuple::point(std::span<const double> values) {
  std::vector<Interval> comps;
  comps.reserve(values.size());
  for (double v : values) comps.push_back(Interval{v, v});
  return IntervalTuple(std::move(comps));
}

IntervalTuple interval_meet(const IntervalTuple& c, const IntervalTuple& d) {
  if (c.size() != d.size())
    throw InvalidInputError("interval tuple length mismatch in meet");
  std::vector<Interval> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out.push_back(Interval{c[i].lo < d[i].lo ? c[i].lo : d[i].lo,
                           c[i].hi > d[i].hi ? c[i].hi : d[i].hi});
  return IntervalTuple(std::move(out));
}

bool subsumes(const IntervalTuple& c, const IntervalTuple& d) {
  if (c.size() != d.size())
    throw InvalidInputError("interval tuple length mismatch in subsumption");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].contains(d[i])) return false;
  return true;
}

}  // namespace conceptdim
