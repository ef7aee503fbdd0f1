#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vmc/errors.hpp"
#include "vmc/model.hpp"

namespace vmc {

inline constexpr std::uint64_t kEnumerationCap = 5'000'000;

// Truncation depth defaults: generous for small k, conservative beyond.
int default_nmax(int k);

// Limiting fraction of clusters with census x at time t. Evaluated in log
// domain; values below the double underflow threshold come back as 0.
// t == 0 is the initial condition: alpha_i for unit vectors, 0 otherwise.
double zeta(const ModelParams& params, const ClusterSize& x, double t);

// Analytic d/dt of zeta: zeta * ((|x| - 1)/t - <x|V|alpha>).
double zeta_derivative(const ModelParams& params, const ClusterSize& x, double t);

namespace detail {
// Number of x with 1 <= |x| <= nmax; throws SizeOverflow past the cap.
std::uint64_t checked_size_count(int k, int nmax, std::uint64_t cap);
}  // namespace detail

// Visits every x with 1 <= |x| <= nmax exactly once in graded lexicographic
// order (by total, then lexicographic), reusing one buffer.
template <class F>
void for_each_size(int k, int nmax, F&& fn, std::uint64_t cap = kEnumerationCap) {
  detail::checked_size_count(k, nmax, cap);
  ClusterSize x;
  x.counts.assign(k, 0);
  auto emit = [&](auto&& self, int coord, int remaining) -> void {
    if (coord == k - 1) {
      x.counts[coord] = remaining;
      fn(static_cast<const ClusterSize&>(x));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      x.counts[coord] = v;
      self(self, coord + 1, remaining - v);
    }
  };
  for (int total = 1; total <= nmax; ++total) emit(emit, 0, total);
}

std::vector<ClusterSize> enumerate_sizes(int k, int nmax, std::uint64_t cap = kEnumerationCap);

struct MassResult {
  std::vector<double> mass;  // sum over truncated x of zeta_x(t) * x, per type
  double tail_bound = 0.0;   // max over types of the last graded level's contribution
};

// Truncated total mass vector. The tail bound is a diagnostic (the last
// level's mass), not a certified remainder.
MassResult total_mass(const ModelParams& params, double t, int nmax);

struct MseResidual {
  double residual = 0.0;
  double scale = 0.0;  // max magnitude among derivative, depletion and coagulation terms
};

// Residual of the modified coagulation balance at (x, t): analytic d/dt of
// the closed form minus (-zeta <x|V|alpha> + 1/2 sum_{y+z=x} <y|V|z> zeta_y
// zeta_z). The convolution is finite and exact.
MseResidual mse_residual(const ModelParams& params, const ClusterSize& x, double t);

struct ClusterDistribution {
  ModelParams params;
  double t = 0.0;
  int nmax = 0;
  // Graded lexicographic order, all x with 1 <= |x| <= nmax.
  std::vector<std::pair<ClusterSize, double>> entries;
};

ClusterDistribution cluster_distribution(const ModelParams& params, double t, int nmax);

}  // namespace vmc
