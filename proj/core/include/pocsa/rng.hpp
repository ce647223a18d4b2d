#pragma once

#include <cstdint>
#include <random>

namespace pocsa {

/// Mixes a campaign seed with an index into an independent child seed.
/// Used for per-run and per-sweep-member sub-streams, so that adding runs
/// never perturbs the seeds of earlier runs.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Reproducible random stream identified by (seed, stream_id).
///
/// Each optimizer of an ensemble owns one stream (ids 1..m) and the run owns
/// a master stream (id 0). A stream is never shared across threads.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }

  // 53-bit mantissa fill, so the result is bit-identical across standard
  // libraries (std::uniform_real_distribution is not).
  double uniform01();

  // Standard Cauchy deviate via inverse CDF. The pole at u = 0 is resampled.
  double cauchy();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

/// Inverse CDF of the standard Cauchy distribution: tan(pi * (u - 1/2)).
double cauchy_from_uniform(double u) noexcept;

}  // namespace pocsa
