#pragma once

#include "gammafree/callan.hpp"
#include "gammafree/forest.hpp"
#include "gammafree/matrix.hpp"
#include "gammafree/perm.hpp"

namespace gammafree {

// Forest on grid points, keyed by the first coordinate.
using PointForest = Forest<Point, PointFirstLess>;

// True when some position i has alpha_i < alpha_{i+1} and
// beta_i < beta_{i+1} simultaneously.
bool has_common_rise(const PermPair& pair);

// Properly labeled: for every edge u -> v, u.x < v.x and the subtree
// of v contains a vertex whose second coordinate is below u.y.
bool is_properly_labeled(const PointForest& forest);

// Leftmost-valid: increasing in the first coordinate, and the leftmost
// child v of every non-leaf u (the child with the largest first
// coordinate) satisfies v.y < u.y.
bool is_leftmost_valid(const PointForest& forest);

// Leftmost-valid tree -> properly labeled tree on the same vertex set
// and with the same root.  Recursively converts the child subtrees,
// then repeatedly merges every prefix of the child sequence that ends
// directly before a subtree lacking a vertex below the root's second
// coordinate into that subtree.
PointForest f_convert(const PointForest& tree);

// Inverse of f_convert: unstacks the merged prefixes by walking from
// the first pre-order vertex below the root's second coordinate up to
// the root's leftmost child.
PointForest f_inverse(const PointForest& tree);

// Componentwise f_convert / f_inverse over a forest.
PointForest psi(const PointForest& forest);
PointForest psi_inverse(const PointForest& forest);

// The increasing point forest carried by a Gamma-free matrix whose
// rows each hold exactly one top-1 at (i, eta_i): vertices are those
// points, edges are the column-graph edges projected onto them.
PointForest matrix_point_forest(const BinaryMatrix& m);

// Complete matrix (square, Gamma-free, no all-zero line, top-1's =
// leftmost 1's) <-> pair of permutations with no common rise whose
// point sequence runs through the matrix's top-1 positions.
PermPair matrix_to_pair(const BinaryMatrix& m);
BinaryMatrix pair_to_matrix(const PermPair& pair);

}  // namespace gammafree
