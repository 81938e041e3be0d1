#pragma once

#include <vector>

#include "gammafree/callan.hpp"
#include "gammafree/matrix.hpp"

namespace gammafree {

// Gamma-free n x k matrix -> (n,k)-Callan sequence: project the column
// graph's special edges to row paths, pair each path with the top-1
// columns of its highest row, hang the pairs on the increasing forest
// induced by the regular edges, and read the forest off in pre-order.
CallanSequence phi(const BinaryMatrix& m);

// Order in which the reconstruction processes forest vertices.  Any
// order that places children before parents yields the same matrix;
// deepest_first exists so tests can confirm that.
enum class FillOrder { post_order, deepest_first };

// Callan sequence -> the unique Gamma-free matrix mapping to it.
BinaryMatrix phi_inverse(const CallanSequence& seq,
                         FillOrder order = FillOrder::post_order);

// Reconstruction together with the 1-placements in the order they were
// made; within every column the placements run strictly top-to-bottom.
struct PhiInverseTrace {
    BinaryMatrix matrix;
    std::vector<Pos> placements;
};

PhiInverseTrace phi_inverse_traced(const CallanSequence& seq,
                                   FillOrder order = FillOrder::post_order);

}  // namespace gammafree
