#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vmc/matrix.hpp"
#include "vmc/model.hpp"

namespace vmc {

// Mean offspring counts: m(i,j) is the expected number of type-j children of
// a type-i parent.
struct MeanMatrix {
  Matrix m;
};

// The coalescent identification m_ij = v_ij * alpha_j * t, computed exactly
// in that form.
MeanMatrix mean_matrix(const ModelParams& params, double t);

// Offspring generating function of the Poisson process:
// f_i(s) = exp(sum_j m_ij (s_j - 1)), for s in [0,1]^k.
std::vector<double> pgf(const MeanMatrix& m, const std::vector<double>& s);

struct ExtinctionVector {
  std::vector<double> eta;
  std::size_t iterations = 0;
  double residual = 0.0;  // max_i |f_i(eta) - eta_i|
};

// Extinction probabilities per starting type. All ones when rho(m) <= 1
// (within the phase tolerance); otherwise the smallest fixed point of the
// generating-function map, reached monotonically from zero.
ExtinctionVector extinction_fixed_point(const MeanMatrix& m);

struct ExtinctionSeries {
  std::vector<double> eta;
  double tail_bound = 0.0;
};

// Series route: eta_l = (1/alpha_l) * sum over truncated cluster sizes of
// zeta_x(t) x_l. Requires the mean matrix in the decomposed form
// V D[alpha] t, which (params, t) supplies natively.
ExtinctionSeries extinction_series(const ModelParams& params, double t, int nmax);

inline constexpr std::size_t kDefaultMaxGenerations = 10'000;
inline constexpr std::uint64_t kDefaultPopulationCap = 1'000'000;

struct BranchingOutcome {
  bool extinct = false;
  std::size_t generation = 0;  // generation at which the population hit zero
};

// One trajectory from a single type-`start_type` individual. The type-j count
// of the next generation is drawn once as Poisson(sum_i Z_i m_ij), which has
// exactly the law of per-individual Poisson(m_ij) draws (independent Poisson
// counts add to a Poisson of the summed mean). Hitting either cap reports
// survival; that verdict is censored, not certain.
BranchingOutcome simulate_branching(const MeanMatrix& m, int start_type, std::uint64_t seed,
                                    std::size_t max_generations = kDefaultMaxGenerations,
                                    std::uint64_t population_cap = kDefaultPopulationCap);

struct ExtinctionEstimate {
  std::uint64_t extinct = 0;
  std::uint64_t replicas = 0;
  double frequency = 0.0;
};

// Replica r runs on stream seed base_seed ^ r; replicas run in parallel and
// merge by commutative counting, so the estimate depends only on the seed
// set, not on scheduling.
ExtinctionEstimate extinction_monte_carlo(const MeanMatrix& m, int start_type,
                                          std::uint64_t base_seed, std::uint64_t replicas,
                                          std::size_t max_generations = kDefaultMaxGenerations,
                                          std::uint64_t population_cap = kDefaultPopulationCap);

}  // namespace vmc
