#include "helmert/gram_schmidt.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>

#include "helmert/sampling.hpp"

namespace helmert {

namespace {
constexpr double kZeroEntryTol = 1e-12;
}

DenseMatrix gs_seed_matrix(std::int64_t n) {
  if (n < kMinOrder) {
    throw std::invalid_argument("seed matrix order must be at least 2");
  }
  DenseMatrix m(n);
  const double avg = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::int64_t j = 0; j < n; ++j) m.at(0, j) = avg;
  for (std::int64_t i = 1; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix gram_schmidt_orthogonalize(std::int64_t n) {
  DenseMatrix m = gs_seed_matrix(n);
  // Row 0 is already unit length and stays untouched. Modified variant:
  // project settled rows out one at a time for numerical stability.
  for (std::int64_t r = 1; r < n; ++r) {
    for (std::int64_t q = 0; q < r; ++q) {
      double dot = 0.0;
      for (std::int64_t k = 0; k < n; ++k) dot += m.at(r, k) * m.at(q, k);
      for (std::int64_t k = 0; k < n; ++k) m.at(r, k) -= dot * m.at(q, k);
    }
    double norm_sq = 0.0;
    for (std::int64_t k = 0; k < n; ++k) norm_sq += m.at(r, k) * m.at(r, k);
    const double norm = std::sqrt(norm_sq);
    if (norm < kZeroEntryTol) {
      // The seed rows are linearly independent, so this is unreachable.
      throw std::runtime_error("row " + std::to_string(r + 1) +
                               " degenerated during orthogonalization");
    }
    for (std::int64_t k = 0; k < n; ++k) m.at(r, k) /= norm;
    std::int64_t last_nonzero = -1;
    for (std::int64_t k = 0; k < n; ++k) {
      if (std::fabs(m.at(r, k)) > kZeroEntryTol) last_nonzero = k;
    }
    if (last_nonzero >= 0 && m.at(r, last_nonzero) > 0.0) {
      for (std::int64_t k = 0; k < n; ++k) m.at(r, k) = -m.at(r, k);
    }
  }
  return m;
}

std::int64_t entry_complexity(const DenseMatrix& m) {
  // Distinct absolute values at 12 significant digits. String keys keep the
  // rounding rule explicit and locale-free.
  std::set<std::string> keys;
  char buf[40];
  for (double e : m.entries()) {
    std::snprintf(buf, sizeof buf, "%.11e", std::fabs(e));
    keys.emplace(buf);
  }
  return static_cast<std::int64_t>(keys.size());
}

EquivalenceVerdict transform_equivalence_check(std::int64_t n,
                                               std::span<const double> z) {
  if (static_cast<std::int64_t>(z.size()) != n) {
    throw std::invalid_argument("input length does not match order");
  }
  const DenseMatrix g = gram_schmidt_orthogonalize(n);
  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t i = 0; i < n; ++i) {
    double dot = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
      dot += g.at(i, k) * z[static_cast<std::size_t>(k)];
    }
    y[static_cast<std::size_t>(i)] = dot;
  }
  const SampleStats stats = sample_stats(z);
  EquivalenceVerdict v;
  v.first_coord = y[0];
  v.scaled_mean = std::sqrt(static_cast<double>(n)) * stats.mean;
  double tail = 0.0;
  for (std::int64_t i = 1; i < n; ++i) {
    tail += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
  }
  v.tail_square_sum = tail;
  v.deviation_sum = stats.w;
  const auto close = [](double a, double b) {
    return std::fabs(a - b) <=
           1e-10 * std::max({std::fabs(a), std::fabs(b), 1.0});
  };
  v.passed = close(v.first_coord, v.scaled_mean) &&
             close(v.tail_square_sum, v.deviation_sum);
  return v;
}

}  // namespace helmert
