#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace helmert {

inline constexpr std::int64_t kMinOrder = 2;
// Above this, row-pair radicand products leave 64-bit range and dense storage
// is unreasonable anyway. All integers formed on the canonical certification
// pass path stay below n(n+1) <= ~1e12 for orders up to this cap.
inline constexpr std::int64_t kMaxOrder = 1000000;

// Validated matrix order. Construction is the only place the n >= 2 and
// n <= 1e6 bounds are enforced; everything downstream takes the wrapper.
class HelmertOrder {
 public:
  explicit HelmertOrder(std::int64_t n);
  std::int64_t value() const noexcept { return n_; }

 private:
  std::int64_t n_;
};

// One matrix entry in exact form: coefficient / sqrt(radicand).
struct SymbolicEntry {
  std::int64_t coefficient = 0;
  std::int64_t radicand = 1;

  double to_double() const;
  // Rendering like "-2/sqrt(6)", used by the CLI's symbolic text format.
  std::string to_string() const;
};

// Entry (i, j), both 1-based, of the order-n matrix.
SymbolicEntry symbolic_entry(HelmertOrder n, std::int64_t i, std::int64_t j);

// Row-major dense square matrix of doubles.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::int64_t order);

  std::int64_t order() const noexcept { return order_; }
  double at(std::int64_t i, std::int64_t j) const {
    return entries_[static_cast<std::size_t>(i * order_ + j)];
  }
  double& at(std::int64_t i, std::int64_t j) {
    return entries_[static_cast<std::size_t>(i * order_ + j)];
  }
  std::span<const double> row(std::int64_t i) const;
  const std::vector<double>& entries() const noexcept { return entries_; }

 private:
  std::int64_t order_;
  std::vector<double> entries_;
};

DenseMatrix build_dense(HelmertOrder n);

// Exact integer form of a whole matrix: every nonzero entry of row i is
// coefficient(i,j) / sqrt(row_radicand(i)). Mutable coefficients so tests can
// inject single-entry perturbations.
class SymbolicMatrix {
 public:
  explicit SymbolicMatrix(std::int64_t order);

  std::int64_t order() const noexcept { return order_; }
  std::int64_t row_radicand(std::int64_t i) const;  // 1-based
  std::int64_t coefficient(std::int64_t i, std::int64_t j) const;  // 1-based
  void set_coefficient(std::int64_t i, std::int64_t j, std::int64_t c);

 private:
  friend SymbolicMatrix build_symbolic(HelmertOrder);
  std::int64_t order_;
  std::vector<std::int64_t> radicands_;
  std::vector<std::int64_t> coefficients_;
};

SymbolicMatrix build_symbolic(HelmertOrder n);

// Row-pair dot product with the shared radicand factored out:
// (row_i . row_j) = integer_sum / sqrt(shared_radicand).
struct ExactGramEntry {
  std::int64_t i = 0;  // 1-based
  std::int64_t j = 0;
  std::int64_t integer_sum = 0;
  std::int64_t shared_radicand = 1;
};

ExactGramEntry exact_gram_entry(HelmertOrder n, std::int64_t i, std::int64_t j);

struct CertificationResult {
  bool passed = true;
  std::int64_t pairs_checked = 0;
  // Set on the first failing pair only; expected_sum is what the integer sum
  // had to be for that pair (row radicand on the diagonal, 0 off it).
  std::optional<ExactGramEntry> first_failure;
  std::int64_t expected_sum = 0;
};

// Certify O_n O_n^T = I in pure integer arithmetic (canonical construction).
CertificationResult verify_orthogonality_exact(HelmertOrder n);
// Same check against an explicit (possibly perturbed) symbolic matrix.
CertificationResult verify_orthogonality_exact(const SymbolicMatrix& m);

// y = O_n z in O(n) time and O(1) extra space beyond the output.
std::vector<double> apply(HelmertOrder n, std::span<const double> z);
// x = O_n^T y, same costs.
std::vector<double> apply_transpose(HelmertOrder n, std::span<const double> y);

}  // namespace helmert
