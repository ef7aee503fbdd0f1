#include "vmc/coalescent_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace vmc {

namespace {

std::vector<double> pair_weights(const Matrix& v, const std::vector<std::uint64_t>& totals) {
  const int k = v.rows();
  std::vector<double> weights(std::size_t(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      weights[std::size_t(i) * k + j] =
          v(i, j) * static_cast<double>(totals[i]) * static_cast<double>(totals[j]);
  return weights;
}

}  // namespace

CoalescentState::CoalescentState(const ModelParams& params, std::uint64_t n, std::uint64_t seed)
    : k_(params.k),
      V_(params.V),
      n_scale_(n),
      type_totals_(partition_counts(params.alpha, n)),
      type_offsets_(params.k + 1, 0),
      particle_total_(0),
      uf_(0),
      pair_table_(pair_weights(params.V, type_totals_)),
      rng_(seed) {
  for (int i = 0; i < k_; ++i) {
    if (type_totals_[i] == 0)
      throw std::invalid_argument("init_state: alpha_i * n must be at least 1 for every type");
    type_offsets_[i + 1] = type_offsets_[i] + type_totals_[i];
  }
  particle_total_ = type_offsets_[k_];

  uf_ = UnionFind(particle_total_);
  cluster_counts_.assign(particle_total_ * k_, 0);
  for (int type = 0; type < k_; ++type) {
    for (std::uint64_t p = type_offsets_[type]; p < type_offsets_[type + 1]; ++p) {
      cluster_counts_[p * k_ + type] = 1;
    }
  }

  // R = <S|V|S> / (2n), constant along the trajectory because S is.
  rate_ = pair_table_.total_weight() / (2.0 * static_cast<double>(n));
  if (!(rate_ > 0.0)) throw std::invalid_argument("init_state: total interaction weight is zero");
}

bool CoalescentState::attempt_merge() {
  ++proposals_;
  const std::size_t pair = pair_table_.sample(rng_);
  const int i = static_cast<int>(pair) / k_;
  const int j = static_cast<int>(pair) % k_;
  const std::uint64_t p = type_offsets_[i] + rng_.next_below(type_totals_[i]);
  const std::uint64_t q = type_offsets_[j] + rng_.next_below(type_totals_[j]);

  const std::uint64_t rp = uf_.find(p);
  const std::uint64_t rq = uf_.find(q);
  if (rp == rq) return false;  // same cluster, possibly p == q

  const std::uint64_t survivor = uf_.unite_roots(rp, rq);
  const std::uint64_t absorbed = survivor == rp ? rq : rp;
  for (int type = 0; type < k_; ++type) {
    cluster_counts_[survivor * k_ + type] += cluster_counts_[absorbed * k_ + type];
  }
  ++accepted_;
  return true;
}

bool CoalescentState::propose_once() {
  time_ += sample_exponential(rng_, rate_);
  return attempt_merge();
}

void CoalescentState::advance_to(double t_stop) {
  if (t_stop < time_) throw std::invalid_argument("run_until: t_stop precedes current time");
  for (;;) {
    const double dt = sample_exponential(rng_, rate_);
    if (time_ + dt > t_stop) {
      time_ = t_stop;
      return;
    }
    time_ += dt;
    attempt_merge();
  }
}

ClusterSize CoalescentState::read_cluster(std::uint64_t root) const {
  ClusterSize x;
  x.counts.assign(k_, 0);
  for (int type = 0; type < k_; ++type)
    x.counts[type] = cluster_counts_[root * k_ + type];
  return x;
}

ClusterSize CoalescentState::cluster_of(std::uint64_t p) const {
  return read_cluster(uf_.find(p));
}

CoalescentState init_state(const ModelParams& params, std::uint64_t n, std::uint64_t seed) {
  return CoalescentState(params, n, seed);
}

CoalescentState& run_until(CoalescentState& state, double t_stop) {
  state.advance_to(t_stop);
  return state;
}

ClusterCensus census(const CoalescentState& state) {
  ClusterCensus out;
  state.for_each_cluster([&](const ClusterSize& x) { ++out[x]; });
  return out;
}

}  // namespace vmc
