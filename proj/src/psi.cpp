#include "gammafree/psi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gammafree/gamma.hpp"
#include "gammafree/phi.hpp"
#include "gammafree/pi.hpp"

namespace gammafree {

bool has_common_rise(const PermPair& pair) {
    for (std::size_t i = 0; i + 1 < pair.size(); ++i)
        if (pair.alpha()[i] < pair.alpha()[i + 1] && pair.beta()[i] < pair.beta()[i + 1])
            return true;
    return false;
}

namespace {

// Value-type tree used by the conversion algorithms; children are kept
// in decreasing order of their roots' first coordinates.
struct PointTree {
    Point root;
    std::vector<PointTree> children;
};

void sort_children(PointTree& t) {
    std::sort(t.children.begin(), t.children.end(),
              [](const PointTree& a, const PointTree& b) { return a.root.x > b.root.x; });
}

int min_y(const PointTree& t) {
    int best = t.root.y;
    for (const PointTree& c : t.children) best = std::min(best, min_y(c));
    return best;
}

PointTree tree_of(const PointForest& f, const Point& root) {
    PointTree t{root, {}};
    for (const Point& c : f.children(root)) t.children.push_back(tree_of(f, c));
    return t;  // forest children are already in decreasing x order
}

std::vector<PointTree> components_of(const PointForest& f) {
    std::vector<PointTree> out;
    for (const Point& r : f.roots()) out.push_back(tree_of(f, r));
    return out;
}

void collect(const PointTree& t, const Point* parent, std::vector<Point>& verts,
             std::vector<std::pair<Point, Point>>& edges) {
    verts.push_back(t.root);
    if (parent) edges.emplace_back(*parent, t.root);
    for (const PointTree& c : t.children) collect(c, &t.root, verts, edges);
}

PointForest forest_of(const std::vector<PointTree>& trees) {
    std::vector<Point> verts;
    std::vector<std::pair<Point, Point>> edges;
    for (const PointTree& t : trees) collect(t, nullptr, verts, edges);
    return PointForest::from_edges(verts, edges);
}

PointTree f_convert_tree(const PointTree& t) {
    if (t.children.empty()) return t;

    std::vector<PointTree> seq;
    seq.reserve(t.children.size());
    for (const PointTree& c : t.children) seq.push_back(f_convert_tree(c));

    const int root_y = t.root.y;
    for (;;) {
        // A sequence element is bad when none of its vertices lies
        // below the root's second coordinate.
        std::size_t bad = seq.size();
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (min_y(seq[i]) >= root_y) {
                bad = i;
                break;
            }
        }
        if (bad == seq.size()) break;
        if (bad == 0)
            throw std::logic_error("merge sequence starts with a bad tree");
        // Merge the prefix before the bad tree under its root.
        PointTree merged = std::move(seq[bad]);
        for (std::size_t j = 0; j < bad; ++j) merged.children.push_back(std::move(seq[j]));
        sort_children(merged);
        seq.erase(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(bad));
        seq.front() = std::move(merged);
    }

    PointTree out{t.root, std::move(seq)};
    sort_children(out);
    return out;
}

// Indexed view of a tree, for parent access during f_inverse.
struct IndexedTree {
    struct Node {
        Point label;
        int parent = -1;
        std::vector<int> kids;  // decreasing x order
    };
    std::vector<Node> nodes;  // 0 is the root

    int build(const PointTree& t, int parent) {
        const int id = static_cast<int>(nodes.size());
        nodes.push_back(Node{t.root, parent, {}});
        for (const PointTree& c : t.children) {
            const int cid = build(c, id);
            nodes[id].kids.push_back(cid);
        }
        return id;
    }

    PointTree subtree(int id) const {
        PointTree t{nodes[id].label, {}};
        for (int c : nodes[id].kids) t.children.push_back(subtree(c));
        return t;
    }

    int subtree_min_y(int id) const {
        int best = nodes[id].label.y;
        for (int c : nodes[id].kids) best = std::min(best, subtree_min_y(c));
        return best;
    }

    // Indices in pre-order (root, then child subtrees by decreasing x).
    std::vector<int> pre_order() const {
        std::vector<int> out;
        std::vector<int> todo{0};
        while (!todo.empty()) {
            const int v = todo.back();
            todo.pop_back();
            out.push_back(v);
            const auto& kids = nodes[v].kids;
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) todo.push_back(*it);
        }
        return out;
    }
};

PointTree f_inverse_tree(const PointTree& t) {
    if (t.children.empty()) return t;

    IndexedTree ix;
    ix.build(t, -1);
    const int root_y = t.root.y;

    // First pre-order vertex strictly below the root's second
    // coordinate; it lives inside the leftmost child's subtree.
    int v1 = -1;
    for (int v : ix.pre_order()) {
        if (ix.nodes[v].label.y < root_y) {
            v1 = v;
            break;
        }
    }
    if (v1 < 0) throw std::invalid_argument("tree is not properly labeled");

    const int leftmost = ix.nodes[0].kids.front();

    std::vector<PointTree> pieces;
    pieces.push_back(ix.subtree(v1));

    // Climb from v1 to the root's leftmost child, peeling off the good
    // siblings (subtrees holding a vertex below root_y) and the pruned
    // remainder of each parent on the way.
    int vc = v1;
    while (vc != leftmost) {
        const int p = ix.nodes[vc].parent;
        if (p < 0) throw std::logic_error("climb escaped the leftmost subtree");
        std::vector<int> bad_kids;
        for (int w : ix.nodes[p].kids) {
            if (w == vc) continue;
            if (ix.subtree_min_y(w) < root_y) {
                if (ix.nodes[w].label.x > ix.nodes[vc].label.x)
                    throw std::logic_error("good sibling left of the climb path");
                pieces.push_back(ix.subtree(w));
            } else {
                bad_kids.push_back(w);
            }
        }
        PointTree reduced{ix.nodes[p].label, {}};
        for (int w : bad_kids) reduced.children.push_back(ix.subtree(w));
        pieces.push_back(std::move(reduced));
        vc = p;
    }

    // All remaining siblings of the leftmost child are good.
    for (int w : ix.nodes[0].kids) {
        if (w == leftmost) continue;
        if (ix.subtree_min_y(w) >= root_y)
            throw std::invalid_argument("tree is not properly labeled");
        pieces.push_back(ix.subtree(w));
    }

    PointTree out{t.root, {}};
    for (const PointTree& piece : pieces) out.children.push_back(f_inverse_tree(piece));
    sort_children(out);
    return out;
}

int forest_min_y(const PointForest& f, const Point& v) {
    int best = v.y;
    for (const Point& c : f.children(v)) best = std::min(best, forest_min_y(f, c));
    return best;
}

}  // namespace

bool is_properly_labeled(const PointForest& forest) {
    for (const Point& v : forest.vertices()) {
        const auto parent = forest.parent(v);
        if (!parent) continue;
        if (parent->x >= v.x) return false;
        if (forest_min_y(forest, v) >= parent->y) return false;
    }
    return true;
}

bool is_leftmost_valid(const PointForest& forest) {
    if (!forest.is_increasing()) return false;
    for (const Point& v : forest.vertices()) {
        const auto& kids = forest.children(v);
        if (!kids.empty() && kids.front().y >= v.y) return false;
    }
    return true;
}

namespace {

PointForest map_components(const PointForest& forest,
                           PointTree (*convert)(const PointTree&)) {
    std::vector<PointTree> out;
    for (const PointTree& t : components_of(forest)) out.push_back(convert(t));
    return forest_of(out);
}

}  // namespace

PointForest f_convert(const PointForest& tree) {
    if (tree.roots().size() != 1)
        throw std::invalid_argument("f_convert expects a single tree");
    if (!is_leftmost_valid(tree))
        throw std::invalid_argument("f_convert expects a leftmost-valid tree");
    return map_components(tree, f_convert_tree);
}

PointForest f_inverse(const PointForest& tree) {
    if (tree.roots().size() != 1)
        throw std::invalid_argument("f_inverse expects a single tree");
    if (!is_properly_labeled(tree))
        throw std::invalid_argument("f_inverse expects a properly labeled tree");
    return map_components(tree, f_inverse_tree);
}

PointForest psi(const PointForest& forest) {
    if (!is_leftmost_valid(forest))
        throw std::invalid_argument("psi expects a leftmost-valid forest");
    return map_components(forest, f_convert_tree);
}

PointForest psi_inverse(const PointForest& forest) {
    if (!is_properly_labeled(forest))
        throw std::invalid_argument("psi_inverse expects a properly labeled forest");
    return map_components(forest, f_inverse_tree);
}

PointForest matrix_point_forest(const BinaryMatrix& m) {
    const std::vector<int> eta = eta_of(m);
    const EdgeGraph g = build_edge_graph(m);
    const RowProjection proj = project_rows(g, m);
    const Forest<int> rows = build_increasing_forest(g, proj);

    auto point = [&eta](int row) { return Point{row, eta[row - 1]}; };
    std::vector<Point> verts;
    std::vector<std::pair<Point, Point>> edges;
    for (int v : rows.vertices()) {
        verts.push_back(point(v));
        if (auto p = rows.parent(v)) edges.emplace_back(point(*p), point(v));
    }
    return PointForest::from_edges(verts, edges);
}

PermPair matrix_to_pair(const BinaryMatrix& m) {
    if (!is_complete_naf(m))
        throw std::invalid_argument("matrix_to_pair requires a complete matrix");
    const PointForest labeled = matrix_point_forest(m);
    if (!is_properly_labeled(labeled))
        throw std::logic_error("complete matrix produced an improperly labeled forest");
    const PointForest leftmost = psi_inverse(labeled);
    const PermPair out = pair_of_points(pi(leftmost));
    if (has_common_rise(out))
        throw std::logic_error("conversion produced a common rise");
    return out;
}

BinaryMatrix pair_to_matrix(const PermPair& pair) {
    if (has_common_rise(pair))
        throw std::invalid_argument("pair_to_matrix requires a pair with no common rise");
    const int n = static_cast<int>(pair.size());
    const PointForest leftmost = pi_inverse<Point, PointFirstLess>(points_of(pair));
    if (!is_leftmost_valid(leftmost))
        throw std::logic_error("rise-free pair produced an invalid forest");
    const PointForest labeled = psi(leftmost);

    std::vector<SetPair> sets;
    for (const Point& p : pi(labeled)) sets.push_back(SetPair{{p.x}, {p.y}});
    const BinaryMatrix out = phi_inverse(CallanSequence(n, n, std::move(sets)));
    if (!is_complete_naf(out))
        throw std::logic_error("reconstructed matrix is not complete");
    return out;
}

}  // namespace gammafree
