#pragma once

#include <compare>
#include <vector>

#include "vmc/errors.hpp"
#include "vmc/matrix.hpp"

namespace vmc {

// Relative tolerance and iteration cap for spectral_radius().
inline constexpr double kSpectralTol = 1e-12;
inline constexpr int kSpectralMaxIter = 100000;

// Half-width of the band around rho == 1 classified as Critical.
inline constexpr double kPhaseTol = 1e-9;

// One coalescent / branching family: k particle types, symmetric nonnegative
// interaction intensities V, strictly positive initial densities alpha.
struct ModelParams {
  int k = 0;
  Matrix V;
  std::vector<double> alpha;
};

// Type census of one cluster; holds at least one particle in total.
struct ClusterSize {
  std::vector<int> counts;

  int total() const;
  static ClusterSize unit(int k, int type);

  auto operator<=>(const ClusterSize&) const = default;
};

enum class Region { Subcritical, Critical, Supercritical };

const char* to_string(Region region);

struct PhaseRegion {
  Region region = Region::Subcritical;
  double rho = 0.0;  // spectral radius of V D[alpha] t
};

// True for the closed subcritical region (rho <= 1 within tolerance).
inline bool subcritical_or_critical(const PhaseRegion& p) {
  return p.region != Region::Supercritical;
}

// Checks symmetry and nonnegativity of V, positivity of alpha, and
// connectivity of the support graph of V. Returns the params unchanged when
// every hypothesis holds; throws ValidationError naming the violated one.
ModelParams validate(ModelParams params);

// Perron root of a nonnegative square matrix. Power iteration runs on A + I
// so that irreducible inputs become primitive (periodic matrices would cycle
// otherwise); the Collatz-Wielandt ratio bounds define the stopping rule.
// Throws NoConvergence past the iteration cap, which signals a degenerate or
// reducible input.
double spectral_radius(const Matrix& a);

// 1 / rho(V D[alpha]); +infinity when the radius is zero.
double gelation_time(const ModelParams& params);

PhaseRegion classify(const ModelParams& params, double t);

}  // namespace vmc
