#include "gammafree/gamma.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gammafree {

std::optional<GammaWitness> find_gamma_witness(const BinaryMatrix& m) {
    // Scan (row, left col, right col, lower row) in ascending
    // lexicographic order and stop at the first complete pattern.
    for (int r = 1; r <= m.rows(); ++r) {
        const std::vector<int> cols = m.cols_of_row(r);
        if (cols.size() < 2) continue;
        for (int left : cols) {
            const std::vector<int> below = m.rows_of_col(left);
            const bool has_below = !below.empty() && below.front() < r;
            if (!has_below) continue;
            for (int right : cols) {
                if (right >= left) break;  // cols ascending; need right < left
                for (int low : below) {
                    if (low >= r) break;
                    return GammaWitness{Pos{r, left}, Pos{r, right}, Pos{low, left}};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_gamma_free(const BinaryMatrix& m) { return !find_gamma_witness(m); }

std::vector<Pos> top_ones(const BinaryMatrix& m) {
    std::vector<Pos> out;
    for (int c = 1; c <= m.cols(); ++c)
        if (auto r = m.highest_one_row(c)) out.push_back(Pos{*r, c});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pos> leading_ones(const BinaryMatrix& m) {
    std::vector<Pos> out;
    for (int r = 1; r <= m.rows(); ++r)
        if (auto c = m.leftmost_one_col(r)) out.push_back(Pos{r, *c});
    return out;  // already ascending by row
}

std::vector<RowClass> classify_rows(const BinaryMatrix& m) {
    std::set<int> top_rows;
    for (const Pos& p : top_ones(m)) top_rows.insert(p.row);
    std::vector<RowClass> out(static_cast<std::size_t>(m.rows()), RowClass::empty);
    for (int r = 1; r <= m.rows(); ++r) {
        if (top_rows.count(r))
            out[r - 1] = RowClass::top;
        else if (!m.row_empty(r))
            out[r - 1] = RowClass::special;
    }
    return out;
}

std::string EdgeGraph::debug_render() const {
    std::ostringstream out;
    for (const ColumnEdge& e : edges)
        out << "(" << e.from.row << "," << e.from.col << ") -> (" << e.to.row << ","
            << e.to.col << ") [" << (e.special ? "special" : "regular") << "]\n";
    return out.str();
}

EdgeGraph build_edge_graph(const BinaryMatrix& m) {
    if (auto w = find_gamma_witness(m))
        throw std::invalid_argument("build_edge_graph requires a Gamma-free matrix");

    EdgeGraph g;
    g.vertices = m.ones();

    std::set<int> top_rows;
    for (const Pos& p : top_ones(m)) top_rows.insert(p.row);

    // One upward edge per non-top 1, to the next 1 above in its column.
    for (const Pos& p : m.ones()) {
        const std::vector<int> col_rows = m.rows_of_col(p.col);
        auto it = std::upper_bound(col_rows.begin(), col_rows.end(), p.row);
        if (it == col_rows.end()) continue;  // p is the top-1 of its column
        g.edges.push_back(ColumnEdge{p, Pos{*it, p.col}, false});
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const ColumnEdge& a, const ColumnEdge& b) { return a.from < b.from; });

    // In each special row, mark the longest outgoing edge.  Edge
    // lengths within one row are pairwise distinct for Gamma-free
    // matrices, so "longest" is unambiguous.
    std::map<int, std::size_t> longest;  // special row -> edge index
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const ColumnEdge& e = g.edges[i];
        if (top_rows.count(e.from.row)) continue;
        auto it = longest.find(e.from.row);
        if (it == longest.end() || g.edges[it->second].length() < e.length())
            longest[e.from.row] = i;
    }
    for (const auto& [row, idx] : longest) {
        (void)row;
        g.edges[idx].special = true;
    }
    return g;
}

std::vector<std::vector<int>> RowPathGraph::paths() const {
    std::map<int, int> next;
    std::set<int> has_incoming;
    for (const auto& [from, to] : edges) {
        next[from] = to;
        has_incoming.insert(to);
    }
    std::vector<std::vector<int>> out;
    for (int v : vertices) {
        if (has_incoming.count(v)) continue;  // not a path start
        std::vector<int> path{v};
        auto it = next.find(v);
        while (it != next.end()) {
            path.push_back(it->second);
            it = next.find(it->second);
        }
        out.push_back(std::move(path));
    }
    return out;  // vertices ascend, so paths come out by minimal row
}

RowProjection project_rows(const EdgeGraph& g, const BinaryMatrix& m) {
    RowProjection proj;
    for (int r = 1; r <= m.rows(); ++r)
        if (!m.row_empty(r)) proj.graph.vertices.push_back(r);
    for (const ColumnEdge& e : g.edges)
        if (e.special) proj.graph.edges.emplace_back(e.from.row, e.to.row);
    std::sort(proj.graph.edges.begin(), proj.graph.edges.end());

    std::map<int, std::vector<int>> top_cols_by_row;
    for (const Pos& p : top_ones(m)) top_cols_by_row[p.row].push_back(p.col);

    for (const std::vector<int>& path : proj.graph.paths()) {
        SetPair pair;
        pair.rows = path;  // ascending
        auto it = top_cols_by_row.find(path.back());
        if (it == top_cols_by_row.end())
            throw std::logic_error("path must end in a top row");
        pair.cols = it->second;
        std::sort(pair.cols.begin(), pair.cols.end());
        proj.pairs.push_back(std::move(pair));
    }
    return proj;
}

Forest<int> build_increasing_forest(const EdgeGraph& g, const RowProjection& proj) {
    std::map<int, int> pair_of_row;  // row -> label (minimal row of its pair)
    std::vector<int> labels;
    for (const SetPair& p : proj.pairs) {
        labels.push_back(p.rows.front());
        for (int r : p.rows) pair_of_row[r] = p.rows.front();
    }
    std::vector<std::pair<int, int>> edges;
    for (const ColumnEdge& e : g.edges) {
        if (e.special) continue;
        auto from = pair_of_row.find(e.from.row);
        auto to = pair_of_row.find(e.to.row);
        if (from == pair_of_row.end() || to == pair_of_row.end())
            throw std::logic_error("column edge endpoint outside every pair");
        edges.emplace_back(from->second, to->second);
    }
    Forest<int> forest = Forest<int>::from_edges(labels, edges);
    if (!forest.is_increasing())
        throw std::logic_error("projected pair forest must be increasing");
    return forest;
}

bool is_complete_naf(const BinaryMatrix& m) {
    if (m.rows() != m.cols()) return false;
    if (m.empty_row_count() != 0 || m.empty_col_count() != 0) return false;
    if (!is_gamma_free(m)) return false;
    return top_ones(m) == leading_ones(m);
}

std::vector<Pos> naf_roots(const BinaryMatrix& m) {
    std::vector<Pos> out;
    for (const Pos& p : m.ones()) {
        const bool right = m.rightmost_one_col(p.row).value() < p.col;
        const bool below = m.rows_of_col(p.col).front() < p.row;
        if (!right && !below) out.push_back(p);
    }
    return out;
}

std::vector<int> eta_of(const BinaryMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eta_of requires a square matrix");
    std::vector<int> eta(static_cast<std::size_t>(m.rows()), 0);
    for (const Pos& p : top_ones(m)) {
        if (eta[p.row - 1] != 0)
            throw std::invalid_argument("row holds more than one top-1");
        eta[p.row - 1] = p.col;
    }
    for (int v : eta)
        if (v == 0) throw std::invalid_argument("row holds no top-1");
    return eta;
}

}  // namespace gammafree
