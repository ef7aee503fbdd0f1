#include "vmc/branching.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "vmc/lambert_euler.hpp"
#include "vmc/rng.hpp"
#include "vmc/smoluchowski.hpp"

namespace vmc {

MeanMatrix mean_matrix(const ModelParams& params, double t) {
  if (t < 0.0) throw std::invalid_argument("mean_matrix: t must be nonnegative");
  MeanMatrix out;
  out.m = Matrix(params.k, params.k);
  for (int i = 0; i < params.k; ++i)
    for (int j = 0; j < params.k; ++j) out.m(i, j) = params.V(i, j) * params.alpha[j] * t;
  return out;
}

std::vector<double> pgf(const MeanMatrix& m, const std::vector<double>& s) {
  const int k = m.m.rows();
  if (static_cast<int>(s.size()) != k) throw std::invalid_argument("pgf: dimension mismatch");
  std::vector<double> out(k);
  for (int i = 0; i < k; ++i) {
    double exponent = 0.0;
    for (int j = 0; j < k; ++j) exponent += m.m(i, j) * (s[j] - 1.0);
    out[i] = std::exp(exponent);
  }
  return out;
}

ExtinctionVector extinction_fixed_point(const MeanMatrix& m) {
  const int k = m.m.rows();
  ExtinctionVector out;

  const double rho = spectral_radius(m.m);
  if (rho <= 1.0 + kPhaseTol) {
    out.eta.assign(k, 1.0);
    return out;
  }

  std::vector<double> s(k, 0.0);
  for (std::size_t iter = 1; iter <= kInversionMaxIter; ++iter) {
    std::vector<double> next = pgf(m, s);
    double residual = 0.0;
    for (int i = 0; i < k; ++i) residual = std::max(residual, std::abs(next[i] - s[i]));
    if (residual <= kInversionTol) {
      out.eta = std::move(next);
      out.iterations = iter;
      out.residual = residual;
      return out;
    }
    s = std::move(next);
  }
  throw NoConvergence("extinction_fixed_point: residual above tolerance after iteration cap");
}

ExtinctionSeries extinction_series(const ModelParams& params, double t, int nmax) {
  const MassResult mass = total_mass(params, t, nmax);
  ExtinctionSeries out;
  out.eta.resize(params.k);
  for (int i = 0; i < params.k; ++i) {
    out.eta[i] = mass.mass[i] / params.alpha[i];
    // Scale the tail diagnostic the same way the series itself is scaled.
    out.tail_bound = std::max(out.tail_bound, mass.tail_bound / params.alpha[i]);
  }
  return out;
}

BranchingOutcome simulate_branching(const MeanMatrix& m, int start_type, std::uint64_t seed,
                                    std::size_t max_generations, std::uint64_t population_cap) {
  const int k = m.m.rows();
  if (start_type < 0 || start_type >= k)
    throw std::invalid_argument("simulate_branching: start type out of range");
  if (max_generations == 0 || population_cap == 0)
    throw std::invalid_argument("simulate_branching: caps must be positive");

  SplitMix64 rng(seed);
  std::vector<std::uint64_t> generation(k, 0), next(k, 0);
  generation[start_type] = 1;

  for (std::size_t gen = 1; gen <= max_generations; ++gen) {
    std::uint64_t total = 0;
    for (int j = 0; j < k; ++j) {
      double mean = 0.0;
      for (int i = 0; i < k; ++i) mean += static_cast<double>(generation[i]) * m.m(i, j);
      next[j] = mean == 0.0 ? 0 : sample_poisson(rng, mean);
      total += next[j];
    }
    generation.swap(next);
    if (total == 0) return {true, gen};
    if (total > population_cap) return {false, gen};
  }
  return {false, max_generations};
}

ExtinctionEstimate extinction_monte_carlo(const MeanMatrix& m, int start_type,
                                          std::uint64_t base_seed, std::uint64_t replicas,
                                          std::size_t max_generations,
                                          std::uint64_t population_cap) {
  if (replicas == 0) throw std::invalid_argument("extinction_monte_carlo: need replicas");

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(hw, replicas);

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t extinct = 0;
    for (std::uint64_t r = begin; r < end; ++r) {
      if (simulate_branching(m, start_type, base_seed ^ r, max_generations, population_cap).extinct)
        ++extinct;
    }
    return extinct;
  };

  std::uint64_t extinct = 0;
  if (workers <= 1) {
    extinct = count_range(0, replicas);
  } else {
    std::vector<std::future<std::uint64_t>> parts;
    const std::uint64_t chunk = (replicas + workers - 1) / workers;
    for (std::uint64_t begin = 0; begin < replicas; begin += chunk) {
      const std::uint64_t end = std::min(begin + chunk, replicas);
      parts.push_back(std::async(std::launch::async, count_range, begin, end));
    }
    for (auto& part : parts) extinct += part.get();
  }

  ExtinctionEstimate out;
  out.extinct = extinct;
  out.replicas = replicas;
  out.frequency = static_cast<double>(extinct) / static_cast<double>(replicas);
  return out;
}

}  // namespace vmc
