#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vmc {

// splitmix64. One instance per replica stream; replica r of a sweep is seeded
// with base_seed ^ r, so parallel sweeps depend only on the seed set.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double next_double();

  // Uniform in [0, bound), unbiased (rejection on the wraparound band).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

double sample_exponential(SplitMix64& rng, double rate);

// Failures before the first success of a Bernoulli(p) sequence; p in (0, 1).
std::uint64_t sample_geometric_skip(SplitMix64& rng, double p);

// Poisson(mean): inversion by search below mean 10, PTRS transformed
// rejection above.
std::uint64_t sample_poisson(SplitMix64& rng, double mean);

// Walker alias table over nonnegative weights; O(1) per sample.
class AliasTable {
 public:
  explicit AliasTable(const std::vector<double>& weights);

  std::size_t sample(SplitMix64& rng) const;
  double total_weight() const { return total_; }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
  double total_ = 0.0;
};

}  // namespace vmc
