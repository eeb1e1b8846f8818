#pragma once

#include <cstdint>

namespace helmert {

class DegreesOfFreedom {
 public:
  explicit DegreesOfFreedom(std::int64_t k);
  std::int64_t value() const noexcept { return k_; }

 private:
  std::int64_t k_;
};

// Standard normal CDF, erfc-backed. Absolute error is libm-level (well under
// 1e-15); clamps to exact 0/1 beyond |x| = 40. Non-finite input throws.
double normal_cdf(double x);

// Regularized incomplete gamma P(a, x) and its upper tail Q(a, x) = 1 - P.
// Power series for x < a + 1, Lentz continued fraction otherwise, so both
// tails are computed without cancellation.
double regularized_lower_gamma(double a, double x);
double regularized_upper_gamma(double a, double x);

// Chi-square CDF with k degrees of freedom: P(k/2, x/2). x < 0 or NaN is a
// domain error; +infinity returns 1. Accurate to ~1e-12 for k <= 1e4,
// x <= 1e5.
double chi2_cdf(DegreesOfFreedom k, double x);
// Upper tail, computed directly (not as 1 - cdf).
double chi2_survival(DegreesOfFreedom k, double x);

// Kolmogorov limiting survival function
// Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2), clamped to
// [0, 1]. Series terms are added until one falls below 1e-12. lambda < 0 or
// NaN is a domain error; tiny lambda returns 1.
double kolmogorov_survival(double lambda);

}  // namespace helmert
