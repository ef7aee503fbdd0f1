#pragma once

// Independent oracles for the test suites. Everything here is deliberately
// naive (brute force, bisection, direct formulas) and must stay decoupled
// from the library's computation paths it is used to check.

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "vmc/model.hpp"
#include "vmc/rng.hpp"

namespace oracle {

// Smallest x >= 0 with x e^{-x} = c, for c = t e^{-t} in (0, 1/e). Plain
// bisection on [0, 1]; x e^{-x} increases there.
inline double bisect_smallest_root(double c) {
  if (!(c >= 0.0) || c > std::exp(-1.0) + 1e-15)
    throw std::invalid_argument("bisect_smallest_root: c outside [0, 1/e]");
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(-mid) < c ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// One-type, unit-rate cluster fraction: l^{l-2} t^{l-1} e^{-lt} / l!,
// coded directly with a plain factorial loop.
inline double one_type_cluster_fraction(int l, double t) {
  double factorial = 1.0;
  for (int i = 2; i <= l; ++i) factorial *= i;
  return std::pow(double(l), l - 2) * std::pow(t, l - 1) * std::exp(-double(l) * t) / factorial;
}

// Extinction probability of a single-type Poisson(mean) branching process:
// smallest root of s = e^{mean (s - 1)} in [0, 1], by bisection. For
// mean <= 1 the smallest root is 1 itself.
inline double poisson_extinction(double mean) {
  if (mean <= 1.0) return 1.0;
  // g(s) = e^{mean(s-1)} - s is positive at 0, negative between the roots,
  // zero at the extinction probability; bisect on the sign of g.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double g = std::exp(mean * (mid - 1.0)) - mid;
    (g > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Sum over all labeled spanning trees of the complete graph on m vertices of
// the product of edge weights, by iterating every Pruefer sequence.
inline double pruefer_tree_sum(const vmc::Matrix& w) {
  const int m = w.rows();
  if (m == 1) return 1.0;
  if (m == 2) return w(0, 1);

  const int seq_len = m - 2;
  std::vector<int> seq(seq_len, 0);
  double sum = 0.0;
  for (;;) {
    // Decode the current sequence into a tree and accumulate its weight.
    std::vector<int> degree(m, 1);
    for (int v : seq) ++degree[v];
    std::vector<char> used(m, 0);
    double weight = 1.0;
    for (int pos = 0; pos < seq_len; ++pos) {
      int leaf = -1;
      for (int v = 0; v < m; ++v) {
        if (!used[v] && degree[v] == 1) {
          leaf = v;
          break;
        }
      }
      weight *= w(leaf, seq[pos]);
      used[leaf] = 1;
      --degree[leaf];
      --degree[seq[pos]];
    }
    int a = -1, b = -1;
    for (int v = 0; v < m; ++v) {
      if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
    }
    weight *= w(a, b);
    sum += weight;

    int pos = seq_len - 1;
    while (pos >= 0 && seq[pos] == m - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return sum;
}

// Symmetric nonnegative interaction matrix with a connected support plus
// positive densities, for randomized property tests. Support connectivity is
// guaranteed by a random spanning tree over the types; extra edges appear
// with probability 1/2.
inline vmc::ModelParams random_model(vmc::SplitMix64& rng, int k) {
  vmc::ModelParams params;
  params.k = k;
  params.V = vmc::Matrix(k, k);
  params.alpha.resize(k);
  for (int i = 0; i < k; ++i) params.alpha[i] = 0.3 + 1.7 * rng.next_double();
  for (int i = 1; i < k; ++i) {
    const int parent = static_cast<int>(rng.next_below(i));
    const double weight = 0.2 + 1.8 * rng.next_double();
    params.V(i, parent) = weight;
    params.V(parent, i) = weight;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      if (params.V(i, j) == 0.0 && rng.next_double() < 0.5) {
        const double weight = 0.2 + 1.8 * rng.next_double();
        params.V(i, j) = weight;
        params.V(j, i) = weight;
      }
    }
  }
  // A lone type needs a self-interaction to have any dynamics at all.
  if (k == 1 && params.V(0, 0) == 0.0) params.V(0, 0) = 0.2 + 1.8 * rng.next_double();
  return vmc::validate(params);
}

// 5-sigma Poisson-style band check: |observed - expected| <= band_sigma *
// sqrt(expected_scale). Returns true when inside.
inline bool within_band(double observed, double expected, double expected_scale,
                        double band_sigma) {
  return std::abs(observed - expected) <= band_sigma * std::sqrt(expected_scale);
}

}  // namespace oracle
