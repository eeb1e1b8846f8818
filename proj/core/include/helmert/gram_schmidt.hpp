#pragma once

#include <cstdint>
#include <span>

#include "helmert/matrix.hpp"

namespace helmert {

// Seed for the textbook alternative: first row averages, the rest is the
// trailing identity block.
DenseMatrix gs_seed_matrix(std::int64_t n);

// Modified Gram-Schmidt on the seed's rows. Row 1 is returned bit-exact;
// every later row is normalized and sign-fixed so its last nonzero entry
// (|e| > 1e-12) is negative.
DenseMatrix gram_schmidt_orthogonalize(std::int64_t n);

// Number of distinct absolute entry values at 12 significant digits. The
// closed-form matrix scores 2n-1; the Gram-Schmidt alternative scores worse
// from n = 4 on, which is the whole point of preferring the closed form.
std::int64_t entry_complexity(const DenseMatrix& m);

struct EquivalenceVerdict {
  bool passed = false;
  double first_coord = 0.0;      // (G z)_1
  double scaled_mean = 0.0;      // sqrt(n) * mean(z)
  double tail_square_sum = 0.0;  // sum_{i>=2} (G z)_i^2
  double deviation_sum = 0.0;    // sum (z_k - mean)^2
};

// Checks that the Gram-Schmidt matrix reproduces the two transform
// identities (first coordinate = scaled mean, tail energy = deviation sum)
// at relative tolerance 1e-10.
EquivalenceVerdict transform_equivalence_check(std::int64_t n,
                                               std::span<const double> z);

}  // namespace helmert
