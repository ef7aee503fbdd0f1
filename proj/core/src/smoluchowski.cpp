#include "vmc/smoluchowski.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vmc/spanning_tree.hpp"
#include "vmc/special.hpp"

namespace vmc {

namespace {

double inner_xva(const ModelParams& params, const ClusterSize& x) {
  // <x|V|alpha>
  double acc = 0.0;
  for (int i = 0; i < params.k; ++i) {
    if (x.counts[i] == 0) continue;
    double va = 0.0;
    for (int j = 0; j < params.k; ++j) va += params.V(i, j) * params.alpha[j];
    acc += x.counts[i] * va;
  }
  return acc;
}

}  // namespace

int default_nmax(int k) {
  if (k <= 2) return 40;
  if (k <= 4) return 20;
  return 12;
}

double zeta(const ModelParams& params, const ClusterSize& x, double t) {
  if (t < 0.0) throw std::invalid_argument("zeta: t must be nonnegative");
  const int total = x.total();
  if (total < 1) throw std::invalid_argument("zeta: empty cluster");

  if (t == 0.0) {
    if (total != 1) return 0.0;
    for (int i = 0; i < params.k; ++i)
      if (x.counts[i] == 1) return params.alpha[i];
    return 0.0;
  }

  const double log_factor = log_tree_factor(params, x);
  if (std::isinf(log_factor)) return 0.0;

  double log_z = log_factor;
  for (int i = 0; i < params.k; ++i) {
    const int xi = x.counts[i];
    if (xi == 0) continue;
    log_z += xi * std::log(params.alpha[i]);
    log_z -= log_factorial(static_cast<std::uint64_t>(xi));
  }
  log_z -= inner_xva(params, x) * t;
  log_z += (total - 1) * std::log(t);
  return std::exp(log_z);
}

double zeta_derivative(const ModelParams& params, const ClusterSize& x, double t) {
  if (t <= 0.0) throw std::invalid_argument("zeta_derivative: t must be positive");
  return zeta(params, x, t) * ((x.total() - 1) / t - inner_xva(params, x));
}

namespace detail {

std::uint64_t checked_size_count(int k, int nmax, std::uint64_t cap) {
  if (k < 1 || nmax < 1) throw std::invalid_argument("size enumeration: k and nmax must be positive");
  // C(nmax + k, k) - 1, accumulated with overflow saturation.
  double count = 1.0;
  for (int i = 1; i <= k; ++i) count *= double(nmax + i) / double(i);
  count -= 1.0;
  if (count > static_cast<double>(cap)) {
    throw SizeOverflow("size enumeration: " + std::to_string(count) + " sizes exceeds cap of " +
                       std::to_string(cap));
  }
  return static_cast<std::uint64_t>(count + 0.5);
}

}  // namespace detail

std::vector<ClusterSize> enumerate_sizes(int k, int nmax, std::uint64_t cap) {
  std::vector<ClusterSize> out;
  out.reserve(detail::checked_size_count(k, nmax, cap));
  for_each_size(
      k, nmax, [&](const ClusterSize& x) { out.push_back(x); }, cap);
  return out;
}

MassResult total_mass(const ModelParams& params, double t, int nmax) {
  if (t <= 0.0) throw std::invalid_argument("total_mass: t must be positive");
  MassResult out;
  out.mass.assign(params.k, 0.0);
  std::vector<double> last_level(params.k, 0.0);
  for_each_size(params.k, nmax, [&](const ClusterSize& x) {
    const double z = zeta(params, x, t);
    if (z == 0.0) return;
    const bool last = x.total() == nmax;
    for (int i = 0; i < params.k; ++i) {
      const double contribution = z * x.counts[i];
      out.mass[i] += contribution;
      if (last) last_level[i] += contribution;
    }
  });
  for (double v : last_level) out.tail_bound = std::max(out.tail_bound, v);
  return out;
}

MseResidual mse_residual(const ModelParams& params, const ClusterSize& x, double t) {
  if (t <= 0.0) throw std::invalid_argument("mse_residual: t must be positive");
  const int k = params.k;

  const double z = zeta(params, x, t);
  const double derivative = z * ((x.total() - 1) / t - inner_xva(params, x));
  const double depletion = z * inner_xva(params, x);

  // 1/2 sum over ordered splits y + z = x with both parts nonempty.
  double coagulation = 0.0;
  ClusterSize y, rest;
  y.counts.assign(k, 0);
  rest.counts.assign(k, 0);
  auto walk = [&](auto&& self, int coord) -> void {
    if (coord == k) {
      const int y_total = y.total();
      if (y_total == 0 || y_total == x.total()) return;
      for (int i = 0; i < k; ++i) rest.counts[i] = x.counts[i] - y.counts[i];
      double kernel = 0.0;  // <y|V|rest>
      for (int i = 0; i < k; ++i) {
        if (y.counts[i] == 0) continue;
        double row = 0.0;
        for (int j = 0; j < k; ++j) row += params.V(i, j) * rest.counts[j];
        kernel += y.counts[i] * row;
      }
      if (kernel == 0.0) return;
      coagulation += kernel * zeta(params, y, t) * zeta(params, rest, t);
      return;
    }
    for (int v = 0; v <= x.counts[coord]; ++v) {
      y.counts[coord] = v;
      self(self, coord + 1);
    }
  };
  walk(walk, 0);
  coagulation *= 0.5;

  MseResidual out;
  out.residual = derivative - (-depletion + coagulation);
  out.scale = std::max({std::abs(derivative), std::abs(depletion), std::abs(coagulation)});
  return out;
}

ClusterDistribution cluster_distribution(const ModelParams& params, double t, int nmax) {
  ClusterDistribution out;
  out.params = params;
  out.t = t;
  out.nmax = nmax;
  out.entries.reserve(detail::checked_size_count(params.k, nmax, kEnumerationCap));
  for_each_size(params.k, nmax, [&](const ClusterSize& x) {
    out.entries.emplace_back(x, zeta(params, x, t));
  });
  return out;
}

}  // namespace vmc
