#pragma once

#include "vmc/matrix.hpp"
#include "vmc/model.hpp"

namespace vmc {

// Complete graph on m vertices with symmetric nonnegative edge weights and a
// zero diagonal.
struct WeightedCompleteGraph {
  int m = 0;
  Matrix w;
};

// Weighted spanning tree enumerator: the sum over spanning trees of the
// product of edge weights, computed as the determinant of the reduced
// weighted Laplacian. A single vertex gives 1; a disconnected weighted
// support gives 0.
double tree_enumerator(const WeightedCompleteGraph& g);

// log of tree_enumerator; -infinity when the enumerator vanishes.
double log_tree_enumerator(const WeightedCompleteGraph& g);

// log of the tree-weight factor of a cluster x: the enumerator of the
// complete graph on the support of x with weights x_i x_j v_ij, divided by
// prod_i x_i, times prod_i (Vx)_i^(x_i - 1). Everything is evaluated on the
// support only, which extends the factor continuously to clusters missing
// some types. (Vx)_i^0 counts as 1 even when (Vx)_i == 0; a zero enumerator
// or a zero base with exponent > 0 marks the type pattern unreachable and
// yields -infinity.
double log_tree_factor(const ModelParams& params, const ClusterSize& x);

}  // namespace vmc
