#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "vmc/model.hpp"

namespace vmc {

using ClusterCensus = std::map<ClusterSize, std::uint64_t>;

struct GiantComponent {
  std::uint64_t size = 0;
  std::vector<std::uint64_t> composition;  // per-type vertex counts, sums to size
};

struct GraphSample {
  std::uint64_t n = 0;  // scale parameter, not the vertex total
  std::vector<std::uint64_t> part_sizes;
  std::uint64_t seed = 0;
  ClusterCensus census;  // finite components; the giant is split out
  GiantComponent giant;
};

// floor(alpha_i n) with largest-remainder rounding, so the counts sum to
// round(n * sum alpha). Shared by the graph and coalescent samplers.
std::vector<std::uint64_t> partition_counts(const std::vector<double>& alpha, std::uint64_t n);

// One snapshot of the multipartite random graph at time t. Every potential
// edge between parts i and j (unordered vertex pairs; within-part pairs use
// p_ii) appears independently with probability 1 - exp(-v_ij t / n). Edges
// are generated by geometric skip sampling over each block's linearized pair
// index, O(edges) expected work, and components come from union-find. The
// single largest component is always reported as `giant` and excluded from
// the census, even below criticality where it is merely the largest finite
// cluster (ties break deterministically). Requires n >= k and the sparse
// regime v_ij t / n < 1.
GraphSample sample_graph(const ModelParams& params, double t, std::uint64_t n,
                         std::uint64_t seed);

// Census counts divided by the scale n.
std::map<ClusterSize, double> empirical_phi(const GraphSample& sample);

}  // namespace vmc
