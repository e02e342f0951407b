#include "conceptdim/measure.hpp"

#include <cmath>

#include "conceptdim/errors.hpp"

namespace conceptdim {

void MeasureSpec::validate(std::size_t attribute_count) const {
  if (!std::isfinite(theta) || theta < 0.0)
    throw InvalidInputError("theta must be finite and nonnegative");
  if (weights.empty()) return;
  if (weights.size() != attribute_count)
    throw InvalidInputError("weight count does not match attribute count");
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0)
      throw InvalidInputError("weights must be finite and nonnegative");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw InvalidInputError("weights must sum to 1");
}

MeasureValue MeasureValue::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) return MeasureValue{0.0, 0, 1};  // empty carrier measures as 0
  if (num < 0 || num > den)
    throw InvalidInputError("measure ratio outside [0,1]");
  return MeasureValue{static_cast<double>(num) / static_cast<double>(den), num, den};
}

MeasureValue interval_measure(const IntervalTuple& d, const MeasureSpec& spec) {
  spec.validate(d.size());
  if (spec.uniform()) {
    std::int64_t tight = 0;
    for (const Interval& c : d)
      if (c.width() <= spec.theta) ++tight;
    return MeasureValue::ratio(tight, static_cast<std::int64_t>(d.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i].width() <= spec.theta) sum += spec.weights[i];
  return MeasureValue::real(sum);
}

AlphaBand AlphaBand::from_fraction(Fraction alpha) {
  if (alpha.cmp(1, 1) > 0) throw InvalidInputError("alpha must lie in [0,1]");
  AlphaBand band;
  band.fraction_ = alpha;
  band.alpha_ = alpha.to_double();
  return band;
}

AlphaBand AlphaBand::from_double(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0)
    throw InvalidInputError("alpha must lie in [0,1]");
  AlphaBand band;
  band.alpha_ = alpha;
  return band;
}

int AlphaBand::cmp_alpha(std::int64_t a, std::int64_t b) const {
  if (fraction_) return fraction_->cmp(a, b);
  return cmp_double_rational(alpha_, a, b);
}

bool AlphaBand::contains(const MeasureValue& nu) const {
  if (nu.exact())
    return cmp_alpha(nu.num, nu.den) < 0 && cmp_alpha(nu.den - nu.num, nu.den) < 0;
  if (fraction_)
    return cmp_double_rational(nu.value, fraction_->num, fraction_->den) > 0 &&
           cmp_double_rational(nu.value, fraction_->den - fraction_->num, fraction_->den) < 0;
  return alpha_ < nu.value && nu.value < 1.0 - alpha_;
}

bool AlphaBand::below_or_at_lower(const MeasureValue& nu) const {
  if (nu.exact()) return cmp_alpha(nu.num, nu.den) >= 0;
  if (fraction_)
    return cmp_double_rational(nu.value, fraction_->num, fraction_->den) <= 0;
  return nu.value <= alpha_;
}

bool AlphaBand::at_or_above_upper(const MeasureValue& nu) const {
  if (nu.exact()) return cmp_alpha(nu.den - nu.num, nu.den) >= 0;
  if (fraction_)
    return cmp_double_rational(nu.value, fraction_->den - fraction_->num, fraction_->den) >= 0;
  return nu.value >= 1.0 - alpha_;
}

bool AlphaBand::empty() const {
  if (fraction_) return fraction_->num >= fraction_->den - fraction_->num;
  return alpha_ >= 0.5;
}

double AlphaBand::alpha_value() const { return alpha_; }

}  // namespace conceptdim
