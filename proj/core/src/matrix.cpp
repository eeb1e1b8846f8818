#include "helmert/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace helmert {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error(
        "exact arithmetic overflowed 64-bit integer range");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error(
        "exact arithmetic overflowed 64-bit integer range");
  }
  return out;
}

// Integer coefficient of entry (i, k) of the canonical construction: row
// i < n is (1, ..., 1, -i, 0, ..., 0) over sqrt(i(i+1)), row n is all ones
// over sqrt(n).
inline std::int64_t canonical_coeff(std::int64_t n, std::int64_t i,
                                    std::int64_t k) {
  if (i < n) {
    if (k <= i) return 1;
    if (k == i + 1) return -i;
    return 0;
  }
  return 1;
}

inline std::int64_t canonical_radicand(std::int64_t n, std::int64_t i) {
  return i < n ? i * (i + 1) : n;
}

// Last column that can hold a nonzero coefficient in row i.
inline std::int64_t canonical_support(std::int64_t n, std::int64_t i) {
  return i < n ? i + 1 : n;
}

void check_index(std::int64_t n, std::int64_t idx, const char* what) {
  if (idx < 1 || idx > n) {
    throw std::invalid_argument(std::string(what) + " index " +
                                std::to_string(idx) +
                                " outside 1.." + std::to_string(n));
  }
}

// Shared certification core. For every row pair (i, j), i >= j, the nonzero
// products share the radicand sqrt(r_i r_j), so the pair's dot product is
// integer_sum / sqrt(r_i r_j) and orthonormality is the pure integer
// statement integer_sum == (i == j ? r_i : 0). Checked=false is reserved for
// the canonical construction, whose partial sums are bounded by n(n+1).
template <bool Checked, class CoeffFn, class RadicandFn, class SupportFn>
CertificationResult certify_impl(std::int64_t n, CoeffFn coeff,
                                 RadicandFn radicand, SupportFn support) {
  CertificationResult res;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= i; ++j) {
      const std::int64_t kmax = std::min(support(i), support(j));
      std::int64_t sum = 0;
      if constexpr (Checked) {
        for (std::int64_t k = 1; k <= kmax; ++k) {
          sum = checked_add(sum, checked_mul(coeff(i, k), coeff(j, k)));
        }
      } else {
        for (std::int64_t k = 1; k <= kmax; ++k) {
          sum += coeff(i, k) * coeff(j, k);
        }
      }
      ++res.pairs_checked;
      const std::int64_t expected = (i == j) ? radicand(i) : 0;
      if (sum != expected) {
        res.passed = false;
        res.first_failure = ExactGramEntry{
            i, j, sum, checked_mul(radicand(i), radicand(j))};
        res.expected_sum = expected;
        return res;
      }
    }
  }
  return res;
}

}  // namespace

HelmertOrder::HelmertOrder(std::int64_t n) : n_(n) {
  if (n < kMinOrder) {
    throw std::invalid_argument("matrix order must be at least 2 (got " +
                                std::to_string(n) + ")");
  }
  if (n > kMaxOrder) {
    throw std::overflow_error("matrix order " + std::to_string(n) +
                              " exceeds the supported ceiling " +
                              std::to_string(kMaxOrder));
  }
}

double SymbolicEntry::to_double() const {
  return static_cast<double>(coefficient) /
         std::sqrt(static_cast<double>(radicand));
}

std::string SymbolicEntry::to_string() const {
  if (coefficient == 0) return "0";
  if (radicand == 1) return std::to_string(coefficient);
  return std::to_string(coefficient) + "/sqrt(" + std::to_string(radicand) +
         ")";
}

SymbolicEntry symbolic_entry(HelmertOrder n, std::int64_t i, std::int64_t j) {
  check_index(n.value(), i, "row");
  check_index(n.value(), j, "column");
  return SymbolicEntry{canonical_coeff(n.value(), i, j),
                       canonical_radicand(n.value(), i)};
}

namespace {
// Dense storage above this order is past the memory budget; the matrix-free
// transform covers large n.
constexpr std::int64_t kMaxDenseOrder = 8192;
}  // namespace

DenseMatrix::DenseMatrix(std::int64_t order) : order_(order) {
  if (order < 1) {
    throw std::invalid_argument("dense matrix order must be positive");
  }
  if (order > kMaxDenseOrder) {
    throw std::length_error("dense storage for order " +
                            std::to_string(order) + " exceeds the budget (" +
                            std::to_string(kMaxDenseOrder) +
                            "); use the matrix-free transform");
  }
  entries_.assign(static_cast<std::size_t>(order) *
                      static_cast<std::size_t>(order),
                  0.0);
}

std::span<const double> DenseMatrix::row(std::int64_t i) const {
  return std::span<const double>(
      entries_.data() + static_cast<std::size_t>(i * order_),
      static_cast<std::size_t>(order_));
}

DenseMatrix build_dense(HelmertOrder n) {
  const std::int64_t nn = n.value();
  DenseMatrix m(nn);
  for (std::int64_t i = 1; i < nn; ++i) {
    // Entry values are coefficient / sqrt(radicand), matching the symbolic
    // form bit for bit.
    const double root = std::sqrt(static_cast<double>(i * (i + 1)));
    const double one = 1.0 / root;
    const double last = static_cast<double>(-i) / root;
    for (std::int64_t k = 1; k <= i; ++k) m.at(i - 1, k - 1) = one;
    m.at(i - 1, i) = last;
  }
  const double bottom = 1.0 / std::sqrt(static_cast<double>(nn));
  for (std::int64_t k = 0; k < nn; ++k) m.at(nn - 1, k) = bottom;
  return m;
}

SymbolicMatrix::SymbolicMatrix(std::int64_t order) : order_(order) {
  if (order < kMinOrder) {
    throw std::invalid_argument("symbolic matrix order must be at least 2");
  }
  // Coefficient storage is dense; keep symbolic matrices small.
  if (order > kMaxDenseOrder) {
    throw std::length_error("symbolic matrix order " + std::to_string(order) +
                            " exceeds the dense budget");
  }
  radicands_.assign(static_cast<std::size_t>(order), 1);
  coefficients_.assign(static_cast<std::size_t>(order) *
                           static_cast<std::size_t>(order),
                       0);
}

std::int64_t SymbolicMatrix::row_radicand(std::int64_t i) const {
  check_index(order_, i, "row");
  return radicands_[static_cast<std::size_t>(i - 1)];
}

std::int64_t SymbolicMatrix::coefficient(std::int64_t i, std::int64_t j) const {
  check_index(order_, i, "row");
  check_index(order_, j, "column");
  return coefficients_[static_cast<std::size_t>((i - 1) * order_ + (j - 1))];
}

void SymbolicMatrix::set_coefficient(std::int64_t i, std::int64_t j,
                                     std::int64_t c) {
  check_index(order_, i, "row");
  check_index(order_, j, "column");
  coefficients_[static_cast<std::size_t>((i - 1) * order_ + (j - 1))] = c;
}

SymbolicMatrix build_symbolic(HelmertOrder n) {
  const std::int64_t nn = n.value();
  SymbolicMatrix m(nn);
  for (std::int64_t i = 1; i <= nn; ++i) {
    m.radicands_[static_cast<std::size_t>(i - 1)] = canonical_radicand(nn, i);
    for (std::int64_t j = 1; j <= nn; ++j) {
      m.coefficients_[static_cast<std::size_t>((i - 1) * nn + (j - 1))] =
          canonical_coeff(nn, i, j);
    }
  }
  return m;
}

ExactGramEntry exact_gram_entry(HelmertOrder n, std::int64_t i,
                                std::int64_t j) {
  const std::int64_t nn = n.value();
  check_index(nn, i, "row");
  check_index(nn, j, "row");
  const std::int64_t kmax =
      std::min(canonical_support(nn, i), canonical_support(nn, j));
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    sum += canonical_coeff(nn, i, k) * canonical_coeff(nn, j, k);
  }
  return ExactGramEntry{
      i, j, sum,
      checked_mul(canonical_radicand(nn, i), canonical_radicand(nn, j))};
}

CertificationResult verify_orthogonality_exact(HelmertOrder n) {
  const std::int64_t nn = n.value();
  return certify_impl<false>(
      nn,
      [nn](std::int64_t i, std::int64_t k) { return canonical_coeff(nn, i, k); },
      [nn](std::int64_t i) { return canonical_radicand(nn, i); },
      [nn](std::int64_t i) { return canonical_support(nn, i); });
}

CertificationResult verify_orthogonality_exact(const SymbolicMatrix& m) {
  const std::int64_t nn = m.order();
  // Perturbed coefficients can be anything, so scan full rows with checked
  // arithmetic.
  return certify_impl<true>(
      nn,
      [&m](std::int64_t i, std::int64_t k) { return m.coefficient(i, k); },
      [&m](std::int64_t i) { return m.row_radicand(i); },
      [nn](std::int64_t) { return nn; });
}

std::vector<double> apply(HelmertOrder n, std::span<const double> z) {
  const std::int64_t nn = n.value();
  if (static_cast<std::int64_t>(z.size()) != nn) {
    throw std::invalid_argument(
        "input length " + std::to_string(z.size()) +
        " does not match matrix order " + std::to_string(nn));
  }
  std::vector<double> y(static_cast<std::size_t>(nn));
  double prefix = 0.0;  // running sum z_1 + ... + z_i
  for (std::int64_t i = 1; i < nn; ++i) {
    prefix += z[static_cast<std::size_t>(i - 1)];
    y[static_cast<std::size_t>(i - 1)] =
        (prefix - static_cast<double>(i) * z[static_cast<std::size_t>(i)]) /
        std::sqrt(static_cast<double>(i * (i + 1)));
  }
  prefix += z[static_cast<std::size_t>(nn - 1)];
  y[static_cast<std::size_t>(nn - 1)] =
      prefix / std::sqrt(static_cast<double>(nn));
  return y;
}

std::vector<double> apply_transpose(HelmertOrder n, std::span<const double> y) {
  const std::int64_t nn = n.value();
  if (static_cast<std::int64_t>(y.size()) != nn) {
    throw std::invalid_argument(
        "input length " + std::to_string(y.size()) +
        " does not match matrix order " + std::to_string(nn));
  }
  std::vector<double> x(static_cast<std::size_t>(nn));
  const double bottom =
      y[static_cast<std::size_t>(nn - 1)] / std::sqrt(static_cast<double>(nn));
  // Column j of O_n has entries y_i / sqrt(i(i+1)) for i >= j, plus the
  // -(j-1) entry from row j-1 and the constant bottom row. Sweep j downward
  // keeping the suffix sum.
  double suffix = 0.0;
  for (std::int64_t j = nn; j >= 1; --j) {
    double v = suffix + bottom;
    if (j >= 2) {
      const double term = y[static_cast<std::size_t>(j - 2)] /
                          std::sqrt(static_cast<double>((j - 1) * j));
      v -= static_cast<double>(j - 1) * term;
      suffix += term;
    }
    x[static_cast<std::size_t>(j - 1)] = v;
  }
  return x;
}

}  // namespace helmert
