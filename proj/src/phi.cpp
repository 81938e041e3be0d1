#include "gammafree/phi.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gammafree/gamma.hpp"
#include "gammafree/pi.hpp"

namespace gammafree {

CallanSequence phi(const BinaryMatrix& m) {
    const EdgeGraph g = build_edge_graph(m);
    const RowProjection proj = project_rows(g, m);
    const Forest<int> forest = build_increasing_forest(g, proj);

    std::map<int, const SetPair*> pair_by_label;
    for (const SetPair& p : proj.pairs) pair_by_label[p.rows.front()] = &p;

    std::vector<SetPair> out;
    for (int label : pi(forest)) out.push_back(*pair_by_label.at(label));
    return CallanSequence(m.rows(), m.cols(), std::move(out));
}

namespace {

// Post-order walk of the canonical forest: children (in stored,
// decreasing order) before their parent, components by decreasing root.
void post_order_into(const Forest<int>& f, int v, std::vector<int>& out) {
    for (int c : f.children(v)) post_order_into(f, c, out);
    out.push_back(v);
}

std::vector<int> fill_order(const Forest<int>& f, FillOrder order) {
    std::vector<int> out;
    if (order == FillOrder::post_order) {
        for (int r : f.roots()) post_order_into(f, r, out);
        return out;
    }
    // deepest_first: all vertices sorted by decreasing depth, ties by
    // ascending label.  Children are strictly deeper than parents, so
    // this is a valid processing order too.
    std::map<int, int> depth;
    for (int v : f.vertices()) {
        int d = 0;
        for (auto p = f.parent(v); p; p = f.parent(*p)) ++d;
        depth[v] = d;
    }
    out = f.vertices();
    std::stable_sort(out.begin(), out.end(),
                     [&depth](int a, int b) { return depth[a] > depth[b]; });
    return out;
}

}  // namespace

PhiInverseTrace phi_inverse_traced(const CallanSequence& seq, FillOrder order) {
    // Rebuild the pair forest from the sequence of minimal rows.
    std::map<int, const SetPair*> pair_by_label;
    std::vector<int> word;
    for (const SetPair& p : seq.pairs()) {
        word.push_back(p.rows.front());
        pair_by_label[p.rows.front()] = &p;
    }
    const Forest<int> forest = pi_inverse(word);

    std::set<Pos> ones;
    std::vector<Pos> placements;
    auto place = [&](int row, int col) {
        if (!ones.insert(Pos{row, col}).second)
            throw std::logic_error("reconstruction placed a 1 twice");
        placements.push_back(Pos{row, col});
    };
    // Rightmost 1 of a row placed so far = minimal column index.
    auto rightmost = [&](int row) {
        for (auto it = ones.lower_bound(Pos{row, 0}); it != ones.end() && it->row == row; ++it)
            return it->col;  // set is ordered by (row, col); first hit is minimal
        throw std::logic_error("reconstruction read an empty row");
    };

    for (int label : fill_order(forest, order)) {
        const SetPair& pair = *pair_by_label.at(label);
        const std::vector<int>& rows = pair.rows;  // ascending
        const int top_row = rows.back();

        // (a) the pair's columns become the top-1's of its highest row.
        for (int c : pair.cols) place(top_row, c);

        // (b) one 1 per child: in the column of the rightmost 1 of the
        // child's lowest row, placed into the highest own row that
        // stays below the child's lowest row.
        for (int child : forest.children(label)) {
            const int child_min_row = child;  // labels are minimal rows
            const int col = rightmost(child_min_row);
            auto it = std::lower_bound(rows.begin(), rows.end(), child_min_row);
            if (it == rows.begin())
                throw std::logic_error("child pair lies below its parent");
            place(*std::prev(it), col);
        }

        // (d) walk the remaining own rows downward; each receives a 1
        // directly below the rightmost 1 of the row above it.
        for (std::size_t h = rows.size() - 1; h-- > 0;)
            place(rows[h], rightmost(rows[h + 1]));
    }

    BinaryMatrix matrix(seq.n(), seq.k(), std::vector<Pos>(ones.begin(), ones.end()));
    return PhiInverseTrace{std::move(matrix), std::move(placements)};
}

BinaryMatrix phi_inverse(const CallanSequence& seq, FillOrder order) {
    return phi_inverse_traced(seq, order).matrix;
}

}  // namespace gammafree
