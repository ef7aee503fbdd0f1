#include "vmc/spanning_tree.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace vmc {

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

void check_graph(const WeightedCompleteGraph& g) {
  if (g.m <= 0) throw std::invalid_argument("tree_enumerator: need at least one vertex");
  if (g.w.rows() != g.m || g.w.cols() != g.m)
    throw std::invalid_argument("tree_enumerator: weight matrix must be m x m");
  for (int i = 0; i < g.m; ++i) {
    if (g.w(i, i) != 0.0) throw std::invalid_argument("tree_enumerator: diagonal must be zero");
    for (int j = 0; j < g.m; ++j) {
      if (!(g.w(i, j) >= 0.0) || g.w(i, j) != g.w(j, i))
        throw std::invalid_argument("tree_enumerator: weights must be symmetric and nonnegative");
    }
  }
}

// Reduced weighted Laplacian: delete row and column 0.
Matrix reduced_laplacian(const WeightedCompleteGraph& g) {
  const int m = g.m;
  Matrix l(m - 1, m - 1);
  for (int i = 1; i < m; ++i) {
    double degree = 0.0;
    for (int j = 0; j < m; ++j) degree += g.w(i, j);
    for (int j = 1; j < m; ++j) l(i - 1, j - 1) = (i == j ? degree : -g.w(i, j));
  }
  return l;
}

SignedLogDet enumerator_det(const WeightedCompleteGraph& g) {
  check_graph(g);
  if (g.m == 1) return {1, 0.0, 1.0};
  return signed_log_det(reduced_laplacian(g));
}

}  // namespace

double tree_enumerator(const WeightedCompleteGraph& g) {
  const SignedLogDet det = enumerator_det(g);
  // The enumerator is a sum of nonnegative products; a negative determinant
  // can only be roundoff around zero.
  if (det.sign <= 0) return 0.0;
  return det.value;
}

double log_tree_enumerator(const WeightedCompleteGraph& g) {
  const SignedLogDet det = enumerator_det(g);
  if (det.sign <= 0) return kMinusInf;
  return det.log_abs;
}

double log_tree_factor(const ModelParams& params, const ClusterSize& x) {
  const int k = params.k;
  if (static_cast<int>(x.counts.size()) != k)
    throw std::invalid_argument("log_tree_factor: size/model dimension mismatch");
  if (x.total() < 1) throw std::invalid_argument("log_tree_factor: empty cluster");

  std::vector<int> support;
  for (int i = 0; i < k; ++i)
    if (x.counts[i] > 0) support.push_back(i);

  const int s = static_cast<int>(support.size());
  double log_tau = 0.0;
  if (s > 1) {
    WeightedCompleteGraph g;
    g.m = s;
    g.w = Matrix(s, s);
    for (int a = 0; a < s; ++a) {
      for (int b = 0; b < s; ++b) {
        if (a == b) continue;
        g.w(a, b) = double(x.counts[support[a]]) * double(x.counts[support[b]]) *
                    params.V(support[a], support[b]);
      }
    }
    log_tau = log_tree_enumerator(g);
    if (log_tau == kMinusInf) return kMinusInf;
  }

  double result = log_tau;
  for (int i : support) result -= std::log(static_cast<double>(x.counts[i]));

  for (int i : support) {
    const int exponent = x.counts[i] - 1;
    if (exponent == 0) continue;  // (Vx)_i^0 == 1, even at a zero base
    double vx = 0.0;
    for (int j = 0; j < k; ++j) vx += params.V(i, j) * x.counts[j];
    if (vx <= 0.0) return kMinusInf;
    result += exponent * std::log(vx);
  }
  return result;
}

}  // namespace vmc
