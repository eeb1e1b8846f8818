#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace helmert {

// Sorted copy of a sample; the empirical CDF support.
struct EcdfSample {
  std::vector<double> values;

  std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(values.size());
  }
  static EcdfSample from(std::span<const double> sample);
};

struct KsResult {
  double d_statistic = 0.0;
  std::int64_t sample_size = 0;
  double p_value = 0.0;
  bool p_underflow = false;  // true p < 1e-12; p_value reported as 0
};

// One-sample Kolmogorov-Smirnov test of `sample` against continuous CDF
// `cdf`. p-value from the asymptotic Kolmogorov distribution with the
// small-sample correction lambda = (sqrt(N) + 0.12 + 0.11/sqrt(N)) * D.
KsResult ks_test(std::span<const double> sample,
                 const std::function<double(double)>& cdf);

// Pearson correlation; throws on length mismatch, length < 2, or a constant
// vector. Result clamped to [-1, 1].
double pearson_r(std::span<const double> a, std::span<const double> b);

// Rank-based quantile bin index (0..bins-1) per element. Ties are broken by
// original position (stable sort), so marginal counts are balanced within 1.
std::vector<std::int64_t> quantile_bins(std::span<const double> v,
                                        std::int64_t bins);

struct ContingencyResult {
  double statistic = 0.0;
  std::int64_t dof = 0;
  double p_value = 0.0;
  bool p_underflow = false;
};

// Chi-square independence test on the bins x bins contingency table of
// quantile-binned (a, b). Requires bins >= 2 and N >= 5 * bins^2 so every
// expected cell count is at least ~5.
ContingencyResult contingency_independence(std::span<const double> a,
                                           std::span<const double> b,
                                           std::int64_t bins);

struct IndependenceResult {
  double pearson_ab = 0.0;
  double pearson_a2b = 0.0;  // corr(a^2, b), catches V-shaped dependence
  ContingencyResult contingency;
};

IndependenceResult independence_checks(std::span<const double> a,
                                       std::span<const double> b,
                                       std::int64_t bins);

}  // namespace helmert
