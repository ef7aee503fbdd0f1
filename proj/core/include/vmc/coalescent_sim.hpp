#pragma once

#include <cstdint>
#include <vector>

#include "vmc/graph_sim.hpp"
#include "vmc/matrix.hpp"
#include "vmc/model.hpp"
#include "vmc/rng.hpp"
#include "vmc/union_find.hpp"

namespace vmc {

// Event-driven merger trajectory with constant-rate thinning.
//
// Proposals arrive at the fixed total rate R = <S|V|S> / (2n), where S (the
// particle count per type) never changes. Each proposal samples an ordered
// type pair (i,j) with probability proportional to v_ij S_i S_j from a
// precomputed alias table, then one uniform particle of each type. A pair
// inside one cluster is rejected with the clock still advanced; this
// includes p == q, which can occur when i == j. Summed over proposals, the
// accepted intensity for two distinct clusters with censuses x and y is
// exactly <x|V|y>/n: the within-cluster particle pairs carry precisely the
// kernel's diagonal excess <x|V|x>, so rejection needs no rate correction,
// and a single particle never bonds with itself.
class CoalescentState {
 public:
  CoalescentState(const ModelParams& params, std::uint64_t n, std::uint64_t seed);

  double time() const { return time_; }
  double proposal_rate() const { return rate_; }
  const std::vector<std::uint64_t>& type_totals() const { return type_totals_; }
  std::uint64_t particle_count() const { return particle_total_; }
  int type_count() const { return k_; }

  std::uint64_t proposals() const { return proposals_; }
  std::uint64_t accepted() const { return accepted_; }

  // Advances the clock by one exponential holding time and attempts one
  // merge; returns whether the proposal was accepted.
  bool propose_once();

  // Advances to exactly t_stop. The draw that would overshoot is discarded,
  // which is harmless by memorylessness; the state stays resumable.
  void advance_to(double t_stop);

  // Type census of the cluster containing particle p.
  ClusterSize cluster_of(std::uint64_t p) const;

  template <class F>
  void for_each_cluster(F&& fn) const {
    for (std::uint64_t p = 0; p < particle_total_; ++p) {
      if (uf_.find(p) != p) continue;
      fn(read_cluster(p));
    }
  }

 private:
  ClusterSize read_cluster(std::uint64_t root) const;
  bool attempt_merge();

  int k_ = 0;
  Matrix V_;
  std::uint64_t n_scale_ = 0;
  double time_ = 0.0;
  std::vector<std::uint64_t> type_totals_;   // S, constant
  std::vector<std::uint64_t> type_offsets_;  // particle id range starts per type
  std::uint64_t particle_total_ = 0;
  double rate_ = 0.0;
  mutable UnionFind uf_;
  std::vector<std::int32_t> cluster_counts_;  // particle_total x k, valid at roots
  AliasTable pair_table_;                     // ordered type pairs, weight v_ij S_i S_j
  SplitMix64 rng_;
  std::uint64_t proposals_ = 0;
  std::uint64_t accepted_ = 0;
};

// floor(alpha_i n) singletons of each type (largest-remainder rounding), at
// time zero. Requires alpha_i n >= 1 for every type.
CoalescentState init_state(const ModelParams& params, std::uint64_t n, std::uint64_t seed);

CoalescentState& run_until(CoalescentState& state, double t_stop);

ClusterCensus census(const CoalescentState& state);

}  // namespace vmc
