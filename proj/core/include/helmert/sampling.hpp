#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace helmert {

struct Seed {
  std::uint64_t value = 0;
};

// Validated (mu, sigma) pair; sigma must be finite and > 0.
class NormalParams {
 public:
  NormalParams(double mu, double sigma);
  double mu() const noexcept { return mu_; }
  double sigma() const noexcept { return sigma_; }

 private:
  double mu_;
  double sigma_;
};

double standardize(double x, const NormalParams& p);    // (x - mu) / sigma
double destandardize(double z, const NormalParams& p);  // mu + sigma * z

struct SampleStats {
  double mean = 0.0;
  double sample_variance = 0.0;  // S^2, divisor n-1
  double w = 0.0;                // sum of squared deviations, (n-1) S^2
};

// Needs at least two values (S^2 is undefined at n = 1).
SampleStats sample_stats(std::span<const double> v);

// Trials are generated in fixed-size chunks, each from its own substream
// derived from (seed, chunk index). The chunk size is part of the
// reproducibility contract: output depends only on (seed, trials, n), never
// on how chunks are split across workers.
inline constexpr std::int64_t kTrialChunk = 1024;
// Refuse batches above this many doubles (~1 GiB) before allocating.
inline constexpr std::int64_t kMaxBatchValues = std::int64_t{1} << 27;

class SampleBatch {
 public:
  std::int64_t trials() const noexcept { return trials_; }
  std::int64_t n() const noexcept { return n_; }
  Seed seed() const noexcept { return seed_; }
  std::span<const double> trial(std::int64_t t) const;
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  friend SampleBatch standard_normal_batch(Seed, std::int64_t, std::int64_t,
                                           int);
  friend SampleBatch centered_exponential_batch(Seed, std::int64_t,
                                                std::int64_t, int);
  SampleBatch(Seed seed, std::int64_t trials, std::int64_t n);
  Seed seed_;
  std::int64_t trials_;
  std::int64_t n_;
  std::vector<double> values_;
};

// trials x n i.i.d. N(0,1) draws, deterministic in (seed, trials, n).
SampleBatch standard_normal_batch(Seed seed, std::int64_t trials,
                                  std::int64_t n, int workers = 1);

// Exp(1) - 1 draws (mean 0, variance 1, skewed). Negative-control input.
SampleBatch centered_exponential_batch(Seed seed, std::int64_t trials,
                                       std::int64_t n, int workers = 1);

}  // namespace helmert
