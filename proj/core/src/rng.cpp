#include "vmc/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vmc/special.hpp"

namespace vmc {

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: zero bound");
  const std::uint64_t threshold = (-bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

double sample_exponential(SplitMix64& rng, double rate) {
  return -std::log1p(-rng.next_double()) / rate;
}

std::uint64_t sample_geometric_skip(SplitMix64& rng, double p) {
  const double g = std::floor(std::log1p(-rng.next_double()) / std::log1p(-p));
  // Past any realistic pair space; avoids UB in the cast.
  if (g > 4.0e18) return std::uint64_t(1) << 62;
  return static_cast<std::uint64_t>(g);
}

namespace {

std::uint64_t poisson_inversion(SplitMix64& rng, double mean) {
  const double u = rng.next_double();
  double p = std::exp(-mean);
  double cumulative = p;
  std::uint64_t x = 0;
  while (u > cumulative && x < 1000) {
    ++x;
    p *= mean / static_cast<double>(x);
    cumulative += p;
  }
  return x;
}

// Hoermann's PTRS transformed rejection; valid for mean >= 10.
std::uint64_t poisson_ptrs(SplitMix64& rng, double mean) {
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = rng.next_double() - 0.5;
    const double v = rng.next_double();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const std::uint64_t k = static_cast<std::uint64_t>(kf);
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kf * log_mean - mean - log_factorial(k);
    if (lhs <= rhs) return k;
  }
}

}  // namespace

std::uint64_t sample_poisson(SplitMix64& rng, double mean) {
  if (mean < 0.0 || !std::isfinite(mean)) throw std::invalid_argument("sample_poisson: bad mean");
  if (mean == 0.0) return 0;
  if (mean < 10.0) return poisson_inversion(rng, mean);
  return poisson_ptrs(rng, mean);
}

AliasTable::AliasTable(const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("AliasTable: empty weights");
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w)) throw std::invalid_argument("AliasTable: bad weight");
    total_ += w;
  }
  if (total_ <= 0.0) throw std::invalid_argument("AliasTable: zero total weight");

  prob_.assign(n, 0.0);
  alias_.assign(n, 0);
  std::vector<double> scaled(n);
  for (std::size_t i = 0; i < n; ++i) scaled[i] = weights[i] * static_cast<double>(n) / total_;

  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (std::uint32_t i : large) prob_[i] = 1.0;
  for (std::uint32_t i : small) prob_[i] = 1.0;  // numerical leftovers
}

std::size_t AliasTable::sample(SplitMix64& rng) const {
  const std::size_t idx = static_cast<std::size_t>(rng.next_below(prob_.size()));
  return rng.next_double() < prob_[idx] ? idx : alias_[idx];
}

}  // namespace vmc
