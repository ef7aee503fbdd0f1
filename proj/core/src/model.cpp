#include "vmc/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmc {

const char* to_string(ValidationFault fault) {
  switch (fault) {
    case ValidationFault::AsymmetricMatrix: return "AsymmetricMatrix";
    case ValidationFault::NegativeEntry: return "NegativeEntry";
    case ValidationFault::NonpositiveAlpha: return "NonpositiveAlpha";
    case ValidationFault::ReducibleMatrix: return "ReducibleMatrix";
  }
  return "UnknownFault";
}

ValidationError::ValidationError(ValidationFault fault, std::string path, const std::string& message)
    : std::runtime_error(std::string(to_string(fault)) + " at " + path + ": " + message),
      fault_(fault),
      path_(std::move(path)) {}

int ClusterSize::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

ClusterSize ClusterSize::unit(int k, int type) {
  ClusterSize x;
  x.counts.assign(k, 0);
  x.counts[type] = 1;
  return x;
}

const char* to_string(Region region) {
  switch (region) {
    case Region::Subcritical: return "subcritical";
    case Region::Critical: return "critical";
    case Region::Supercritical: return "supercritical";
  }
  return "unknown";
}

ModelParams validate(ModelParams params) {
  const int k = params.k;
  if (k <= 0) throw std::invalid_argument("model: k must be positive");
  if (params.V.rows() != k || params.V.cols() != k)
    throw std::invalid_argument("model: V must be k x k");
  if (static_cast<int>(params.alpha.size()) != k)
    throw std::invalid_argument("model: alpha must have length k");

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double v = params.V(i, j);
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw ValidationError(ValidationFault::NegativeEntry,
                              "/V/" + std::to_string(i) + "/" + std::to_string(j),
                              "interaction intensities must be finite and nonnegative");
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (params.V(i, j) != params.V(j, i)) {
        throw ValidationError(ValidationFault::AsymmetricMatrix,
                              "/V/" + std::to_string(i) + "/" + std::to_string(j),
                              "V[i][j] must equal V[j][i] exactly");
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    const double a = params.alpha[i];
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw ValidationError(ValidationFault::NonpositiveAlpha, "/alpha/" + std::to_string(i),
                            "initial densities must be finite and strictly positive");
    }
  }

  // Connectivity of the support graph (entries > 0 exactly), by BFS.
  std::vector<char> seen(k, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int u = queue.back();
    queue.pop_back();
    for (int v = 0; v < k; ++v) {
      if (!seen[v] && params.V(u, v) > 0.0) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ValidationError(ValidationFault::ReducibleMatrix, "/V",
                          "the support graph of V must be connected");
  }
  return params;
}

double spectral_radius(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("spectral_radius: non-square matrix");
  const int n = a.rows();
  if (n == 0) throw std::invalid_argument("spectral_radius: empty matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(a(i, j) >= 0.0) || !std::isfinite(a(i, j)))
        throw std::invalid_argument("spectral_radius: matrix must be nonnegative and finite");

  std::vector<double> x(n, 1.0), y(n);
  for (int iter = 0; iter < kSpectralMaxIter; ++iter) {
    // y = (A + I) x; the shift keeps the iterate positive and the chain aperiodic.
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = 0.0;
    double y_max = 0.0;
    for (int i = 0; i < n; ++i) {
      double acc = x[i];
      for (int j = 0; j < n; ++j) acc += a(i, j) * x[j];
      y[i] = acc;
      const double ratio = acc / x[i];
      ratio_min = std::min(ratio_min, ratio);
      ratio_max = std::max(ratio_max, ratio);
      y_max = std::max(y_max, acc);
    }
    if (ratio_max - ratio_min <= kSpectralTol * ratio_max) {
      return 0.5 * (ratio_max + ratio_min) - 1.0;
    }
    for (int i = 0; i < n; ++i) x[i] = y[i] / y_max;
  }
  throw NoConvergence("spectral_radius: Collatz-Wielandt bounds did not close; input may be reducible");
}

double gelation_time(const ModelParams& params) {
  const double rho = spectral_radius(scale_columns(params.V, params.alpha));
  if (rho == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / rho;
}

PhaseRegion classify(const ModelParams& params, double t) {
  if (t < 0.0) throw std::invalid_argument("classify: t must be nonnegative");
  PhaseRegion out;
  out.rho = spectral_radius(scale_columns(params.V, params.alpha) * t);
  if (std::abs(out.rho - 1.0) <= kPhaseTol) {
    out.region = Region::Critical;
  } else if (out.rho < 1.0) {
    out.region = Region::Subcritical;
  } else {
    out.region = Region::Supercritical;
  }
  return out;
}

}  // namespace vmc
