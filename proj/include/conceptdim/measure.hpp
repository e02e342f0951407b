#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conceptdim/intervals.hpp"
#include "conceptdim/rational.hpp"

namespace conceptdim {

// Normalized measures for the diameter band. Objects are always measured by
// normalized cardinality |A|/|G|. Attribute sets of a binary context are
// measured by |B|/|M|; interval descriptions by the weighted count of
// components whose width is at most theta.
struct MeasureSpec {
  std::vector<double> weights;  // per attribute; empty means uniform 1/|M|
  double theta = 0.0;

  // Throws unless weights are nonnegative, sum to 1 (1e-9), match the
  // attribute count (or are empty), and theta >= 0.
  void validate(std::size_t attribute_count) const;

  bool uniform() const { return weights.empty(); }
};

// A measure value in [0,1]; cardinality-style values carry their exact
// numerator/denominator so strict comparisons are decided in integers.
struct MeasureValue {
  double value = 0.0;
  std::int64_t num = 0;
  std::int64_t den = 0;  // 0 means no exact form

  bool exact() const { return den > 0; }

  static MeasureValue ratio(std::int64_t num, std::int64_t den);
  static MeasureValue real(double value) { return MeasureValue{value, 0, 0}; }
};

// Weighted count of tight components: sum of weight_i over components with
// width <= theta. Uniform weights yield an exact ratio.
MeasureValue interval_measure(const IntervalTuple& d, const MeasureSpec& spec);

// The open band (alpha, 1 - alpha). Membership is strict on both sides and
// decided exactly for rational alphas and rational measure values.
class AlphaBand {
 public:
  static AlphaBand from_fraction(Fraction alpha);
  static AlphaBand from_double(double alpha);

  bool contains(const MeasureValue& nu) const;
  bool below_or_at_lower(const MeasureValue& nu) const;  // nu <= alpha
  bool at_or_above_upper(const MeasureValue& nu) const;  // nu >= 1 - alpha

  // True when alpha >= 1 - alpha, i.e. the band is empty.
  bool empty() const;

  double alpha_value() const;
  const std::optional<Fraction>& fraction() const { return fraction_; }

 private:
  std::optional<Fraction> fraction_;
  double alpha_ = 0.0;  // used when no exact fraction

  // Sign of (alpha - a/b), exact.
  int cmp_alpha(std::int64_t a, std::int64_t b) const;
};

}  // namespace conceptdim
