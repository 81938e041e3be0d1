#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gammafree/callan.hpp"
#include "gammafree/forest.hpp"
#include "gammafree/matrix.hpp"
#include "gammafree/perm.hpp"
#include "gammafree/psi.hpp"

namespace gammafree {

// naive filters all 2^(n*k) matrices and is limited to n*k <= 16;
// pruned backtracks over the cells in raster order (top row first,
// left to right) and is limited to n*k <= 25.  Both stream matrices in
// ascending order of their text rendering; exceeding a limit is an
// error, never a silent truncation.
enum class EnumMode { naive, pruned };

void for_each_gamma_free(int n, int k, EnumMode mode,
                         const std::function<void(const BinaryMatrix&)>& visit);
std::vector<BinaryMatrix> enumerate_gamma_free(int n, int k, EnumMode mode);
std::uint64_t count_gamma_free(int n, int k, EnumMode mode);

// All (n,k)-Callan sequences, sorted by their serialized form; the
// same n*k <= 25 limit as the pruned matrix enumeration applies.
std::vector<CallanSequence> enumerate_callan(int n, int k);

// All increasing forests on a set of labels (at most 7): every label
// picks either a smaller label as parent or none.
std::vector<Forest<int>> enumerate_increasing_forests(const std::vector<int>& labels);
std::vector<Forest<int>> enumerate_increasing_forests(int n);  // labels 1..n

// All increasing point forests on {(i, eta_i)}, optionally filtered
// down to one of the two labeling disciplines.
enum class PointForestKind { properly_labeled, leftmost_valid };
std::vector<PointForest> enumerate_increasing_point_forests(const std::vector<int>& eta);
std::vector<PointForest> enumerate_point_forests(const std::vector<int>& eta,
                                                 PointForestKind kind);

// All complete matrices of size n x n (n <= 5): Gamma-free, no
// all-zero line, top-1's equal to leftmost 1's.
std::vector<BinaryMatrix> enumerate_complete_naf(int n);

std::vector<std::vector<int>> enumerate_permutations(int n);  // n <= 7, lexicographic

// All pairs of permutations of {1..n} with no common rise (n <= 5).
std::vector<PermPair> enumerate_no_common_rise(int n);

}  // namespace gammafree
