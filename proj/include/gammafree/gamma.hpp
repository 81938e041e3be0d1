#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammafree/callan.hpp"
#include "gammafree/forest.hpp"
#include "gammafree/matrix.hpp"

namespace gammafree {

// Witness of a Gamma pattern: two 1's sharing a row plus a 1 below the
// left member of the pair (left = larger column index) in its column.
struct GammaWitness {
    Pos upper_left;
    Pos upper_right;
    Pos lower_left;
    bool operator==(const GammaWitness&) const = default;
};

// Lexicographically smallest witness over the tuple (shared row, left
// column, right column, lower row), or nullopt if the matrix is
// Gamma-free.
std::optional<GammaWitness> find_gamma_witness(const BinaryMatrix& m);
bool is_gamma_free(const BinaryMatrix& m);

// Highest 1 of every nonempty column / leftmost 1 of every nonempty
// row, sorted by position.
std::vector<Pos> top_ones(const BinaryMatrix& m);
std::vector<Pos> leading_ones(const BinaryMatrix& m);

// A row is `top` when it holds the highest 1 of some column, `special`
// when it has 1's but none of them is such a highest 1.
enum class RowClass { empty, top, special };
std::vector<RowClass> classify_rows(const BinaryMatrix& m);  // index row-1

// Edge of the column graph: joins a non-top 1 upward to the next 1
// above it in its column.
struct ColumnEdge {
    Pos from;
    Pos to;
    bool special = false;
    int length() const { return to.row - from.row; }
    bool operator==(const ColumnEdge&) const = default;
};

// Column graph of a Gamma-free matrix.  Every 1 is a vertex; every
// non-top 1 contributes one upward edge.  Edges leaving a common row
// have pairwise distinct lengths, and for each special row the longest
// outgoing edge is marked special.
struct EdgeGraph {
    std::vector<Pos> vertices;      // all 1's, sorted
    std::vector<ColumnEdge> edges;  // sorted by origin
    std::string debug_render() const;  // "(r,c) -> (r,c) [regular]" lines
};

EdgeGraph build_edge_graph(const BinaryMatrix& m);  // requires Gamma-free

// Special edges projected onto row indices.  The result is a disjoint
// union of upward paths, one ending in each top row.
struct RowPathGraph {
    std::vector<int> vertices;               // nonempty rows, ascending
    std::vector<std::pair<int, int>> edges;  // lower row -> upper row
    std::vector<std::vector<int>> paths() const;  // each ascending, by min row
};

// Per path P: the pair (rows of P, columns of the top-1's in the row
// max P).  Pairs are listed by ascending minimal row.
struct RowProjection {
    RowPathGraph graph;
    std::vector<SetPair> pairs;
};

RowProjection project_rows(const EdgeGraph& g, const BinaryMatrix& m);

// Increasing forest on the projected pairs.  Vertices are labeled by
// the pair's minimal row; every regular edge of the column graph
// yields the forest edge (pair holding its lower row) -> (pair holding
// its upper row).
Forest<int> build_increasing_forest(const EdgeGraph& g, const RowProjection& proj);

// Square, Gamma-free, no all-zero row or column, and the set of
// highest-of-column 1's coincides with the set of leftmost-of-row 1's.
bool is_complete_naf(const BinaryMatrix& m);

// Roots of the forest structure carried by the 1's of a matrix: 1's
// with no 1 to their right in their row (smaller column) nor below
// them in their column (smaller row).
std::vector<Pos> naf_roots(const BinaryMatrix& m);

// eta_i = column of the unique top-1 in row i.  Requires every row to
// hold exactly one top-1, which forces the matrix to be square.
std::vector<int> eta_of(const BinaryMatrix& m);

}  // namespace gammafree
