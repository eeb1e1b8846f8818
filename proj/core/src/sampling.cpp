#include "helmert/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "rng.hpp"

namespace helmert {

NormalParams::NormalParams(double mu, double sigma) : mu_(mu), sigma_(sigma) {
  if (!std::isfinite(mu) || !std::isfinite(sigma)) {
    throw std::invalid_argument("distribution parameters must be finite");
  }
  if (sigma <= 0.0) {
    throw std::invalid_argument("sigma must be positive (got " +
                                std::to_string(sigma) + ")");
  }
}

double standardize(double x, const NormalParams& p) {
  return (x - p.mu()) / p.sigma();
}

double destandardize(double z, const NormalParams& p) {
  return p.mu() + p.sigma() * z;
}

SampleStats sample_stats(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 2) {
    throw std::invalid_argument(
        "sample_stats needs at least two values; the sample variance is "
        "undefined for a single observation");
  }
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(n);
  double w = 0.0;
  for (double x : v) {
    const double d = x - mean;
    w += d * d;
  }
  return SampleStats{mean, w / static_cast<double>(n - 1), w};
}

SampleBatch::SampleBatch(Seed seed, std::int64_t trials, std::int64_t n)
    : seed_(seed), trials_(trials), n_(n) {
  values_.resize(static_cast<std::size_t>(trials * n));
}

std::span<const double> SampleBatch::trial(std::int64_t t) const {
  if (t < 0 || t >= trials_) {
    throw std::invalid_argument("trial index out of range");
  }
  return std::span<const double>(
      values_.data() + static_cast<std::size_t>(t * n_),
      static_cast<std::size_t>(n_));
}

namespace {

void check_batch_shape(std::int64_t trials, std::int64_t n) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  if (n < 2) {
    throw std::invalid_argument("per-trial sample size must be at least 2");
  }
  if (trials > kMaxBatchValues / n) {
    throw std::length_error(
        "batch of " + std::to_string(trials) + " x " + std::to_string(n) +
        " values exceeds the memory budget of " +
        std::to_string(kMaxBatchValues) + " doubles");
  }
}

// Fill values chunk by chunk; each chunk owns a substream derived only from
// (seed, chunk index), so any worker split produces identical output. The
// filler gets the chunk's flat value range and its substream state.
template <class FillChunk>
void fill_chunked(std::vector<double>* values, Seed seed, std::int64_t trials,
                  std::int64_t n, int workers, FillChunk fill_chunk) {
  const std::int64_t chunks = (trials + kTrialChunk - 1) / kTrialChunk;
  detail::run_indexed(chunks, workers, [&](std::int64_t c) {
    const std::uint64_t state =
        detail::substream_state(seed.value, static_cast<std::uint64_t>(c));
    const std::int64_t t_begin = c * kTrialChunk;
    const std::int64_t t_end = std::min(trials, t_begin + kTrialChunk);
    fill_chunk(values->data() + static_cast<std::size_t>(t_begin * n),
               (t_end - t_begin) * n, state);
  });
}

}  // namespace

SampleBatch standard_normal_batch(Seed seed, std::int64_t trials,
                                  std::int64_t n, int workers) {
  check_batch_shape(trials, n);
  SampleBatch batch(seed, trials, n);
  fill_chunked(&batch.values_, seed, trials, n, workers,
               [](double* out, std::int64_t count, std::uint64_t state) {
                 detail::NormalStream g(state);
                 for (std::int64_t k = 0; k < count; ++k) out[k] = g.next();
               });
  return batch;
}

SampleBatch centered_exponential_batch(Seed seed, std::int64_t trials,
                                       std::int64_t n, int workers) {
  check_batch_shape(trials, n);
  SampleBatch batch(seed, trials, n);
  fill_chunked(&batch.values_, seed, trials, n, workers,
               [](double* out, std::int64_t count, std::uint64_t state) {
                 detail::UniformStream u(state);
                 for (std::int64_t k = 0; k < count; ++k) {
                   // -log(1 - U) - 1 has mean 0 and variance 1.
                   out[k] = -std::log1p(-u.next_unit()) - 1.0;
                 }
               });
  return batch;
}

}  // namespace helmert
