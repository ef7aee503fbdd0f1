#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vmc/model.hpp"

namespace vmc {

// Absolute residual bound for fixed-point solvers (both sides are O(alpha t)).
inline constexpr double kInversionTol = 1e-12;
inline constexpr std::size_t kInversionMaxIter = 1'000'000;

struct InversionResult {
  std::vector<double> y;
  std::size_t iterations = 0;
  // max_i |y_i e^{-(Vy)_i} - alpha_i t e^{-(V alpha t)_i}|
  double residual = 0.0;
  PhaseRegion region;
};

// The unique y in the closed subcritical region with
//   y_i e^{-(Vy)_i} = alpha_i t e^{-(V alpha t)_i}  for all i.
// Below and at criticality this is alpha*t itself. Above it, the offspring
// generating-function map is iterated upward from zero; the iterate is
// componentwise nondecreasing and converges to the smallest fixed point,
// which is exactly the solution the closed region selects (substituting
// s_i = y_i / (alpha_i t) maps one equation onto the other). Throws
// NoConvergence if the residual stays above kInversionTol past the cap.
InversionResult invert(const ModelParams& params, double t);

// Smallest x >= 0 with x e^{-x} = t e^{-t}. Equals t on (0,1]; for t > 1 the
// root lies in (0,1) and is found by bisection (200 halvings).
double invert_1d(double t);

// invert() at every grid point; the grid must be strictly increasing.
std::vector<std::pair<double, InversionResult>> trace_post_gel(
    const ModelParams& params, const std::vector<double>& t_grid);

}  // namespace vmc
