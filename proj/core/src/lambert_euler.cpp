#include "vmc/lambert_euler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vmc/branching.hpp"

namespace vmc {

namespace {

// max_i |y_i e^{-(Vy)_i} - rhs_i|
double equation_residual(const ModelParams& params, const std::vector<double>& y,
                         const std::vector<double>& rhs) {
  const std::vector<double> vy = params.V * y;
  double worst = 0.0;
  for (int i = 0; i < params.k; ++i) {
    const double lhs = y[i] * std::exp(-vy[i]);
    worst = std::max(worst, std::abs(lhs - rhs[i]));
  }
  return worst;
}

}  // namespace

InversionResult invert(const ModelParams& params, double t) {
  if (t <= 0.0) throw std::invalid_argument("invert: t must be positive");

  InversionResult out;
  out.region = classify(params, t);

  std::vector<double> alpha_t(params.k);
  for (int i = 0; i < params.k; ++i) alpha_t[i] = params.alpha[i] * t;
  const std::vector<double> v_alpha_t = params.V * alpha_t;
  std::vector<double> rhs(params.k);
  for (int i = 0; i < params.k; ++i) rhs[i] = alpha_t[i] * std::exp(-v_alpha_t[i]);

  if (subcritical_or_critical(out.region)) {
    out.y = alpha_t;
    out.iterations = 0;
    out.residual = equation_residual(params, out.y, rhs);
    return out;
  }

  const MeanMatrix m = mean_matrix(params, t);
  std::vector<double> s(params.k, 0.0);
  std::vector<double> y(params.k, 0.0);
  for (std::size_t iter = 1; iter <= kInversionMaxIter; ++iter) {
    std::vector<double> next = pgf(m, s);
    for (int i = 0; i < params.k; ++i) y[i] = alpha_t[i] * next[i];
    const double residual = equation_residual(params, y, rhs);
    if (residual <= kInversionTol) {
      out.y = y;
      out.iterations = iter;
      out.residual = residual;
      return out;
    }
    if (next == s) {
      throw NoConvergence("invert: iteration stalled at residual " + std::to_string(residual) +
                          " for t = " + std::to_string(t));
    }
    s = std::move(next);
  }
  throw NoConvergence("invert: residual above tolerance after iteration cap at t = " +
                      std::to_string(t));
}

double invert_1d(double t) {
  if (t <= 0.0) throw std::invalid_argument("invert_1d: t must be positive");
  if (t <= 1.0) return t;

  const double target = t * std::exp(-t);
  double lo = 0.0, hi = 1.0;
  // x e^{-x} is increasing on [0,1], so the bracket is monotone.
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::exp(-mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<std::pair<double, InversionResult>> trace_post_gel(
    const ModelParams& params, const std::vector<double>& t_grid) {
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("trace_post_gel: grid must be strictly increasing");
  }
  std::vector<std::pair<double, InversionResult>> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) out.emplace_back(t, invert(params, t));
  return out;
}

}  // namespace vmc
