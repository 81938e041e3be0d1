#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gammafree {

// Rooted forest with unique labels and a total key order supplied by
// Less.  Instances are kept in canonical form: the root list and every
// child list are sorted in decreasing key order, so two structurally
// equal forests compare equal regardless of construction order.
template <typename Label, typename Less = std::less<Label>>
class Forest {
public:
    Forest() = default;

    // Builds a forest from its vertex list and parent->child edges,
    // given in any order.  Rejects duplicate labels, edges touching
    // unknown vertices, vertices with two parents, and cycles.
    static Forest from_edges(const std::vector<Label>& vertices,
                             const std::vector<std::pair<Label, Label>>& edges) {
        Forest f;
        for (const Label& v : vertices) {
            auto [it, fresh] = f.nodes_.emplace(v, Node{});
            (void)it;
            if (!fresh) throw std::invalid_argument("duplicate forest label");
        }
        for (const auto& [parent, child] : edges) {
            auto pit = f.nodes_.find(parent);
            auto cit = f.nodes_.find(child);
            if (pit == f.nodes_.end() || cit == f.nodes_.end())
                throw std::invalid_argument("forest edge touches an unknown vertex");
            if (cit->second.parent)
                throw std::invalid_argument("forest vertex has two parents");
            cit->second.parent = parent;
            pit->second.children.push_back(child);
        }
        Less less;
        auto desc = [&less](const Label& a, const Label& b) { return less(b, a); };
        for (auto& [label, node] : f.nodes_) {
            (void)label;
            std::sort(node.children.begin(), node.children.end(), desc);
            if (!node.parent) f.roots_.push_back(label);
        }
        std::sort(f.roots_.begin(), f.roots_.end(), desc);
        // Cycle check: every vertex must be reachable from a root.
        std::size_t reached = 0;
        std::vector<Label> todo(f.roots_);
        while (!todo.empty()) {
            Label v = todo.back();
            todo.pop_back();
            ++reached;
            const auto& kids = f.nodes_.find(v)->second.children;
            todo.insert(todo.end(), kids.begin(), kids.end());
        }
        if (reached != f.nodes_.size())
            throw std::invalid_argument("forest edges contain a cycle");
        return f;
    }

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    bool contains(const Label& v) const { return nodes_.find(v) != nodes_.end(); }

    // Roots and child lists come back in decreasing key order.
    const std::vector<Label>& roots() const { return roots_; }

    const std::vector<Label>& children(const Label& v) const {
        return node(v).children;
    }

    std::optional<Label> parent(const Label& v) const { return node(v).parent; }

    bool is_leaf(const Label& v) const { return node(v).children.empty(); }

    std::vector<Label> vertices() const {  // ascending key order
        std::vector<Label> out;
        out.reserve(nodes_.size());
        for (const auto& [label, n] : nodes_) {
            (void)n;
            out.push_back(label);
        }
        return out;
    }

    // True when every child's key exceeds its parent's key.
    bool is_increasing() const {
        Less less;
        for (const auto& [label, n] : nodes_)
            if (n.parent && !less(*n.parent, label)) return false;
        return true;
    }

    // The subtree hanging from v, as a forest with the single root v.
    Forest subtree(const Label& v) const {
        std::vector<Label> verts;
        std::vector<std::pair<Label, Label>> edges;
        std::vector<Label> todo{v};
        while (!todo.empty()) {
            Label u = todo.back();
            todo.pop_back();
            verts.push_back(u);
            for (const Label& w : children(u)) {
                edges.emplace_back(u, w);
                todo.push_back(w);
            }
        }
        return from_edges(verts, edges);
    }

    bool operator==(const Forest& other) const {
        return roots_ == other.roots_ && nodes_ == other.nodes_;
    }

private:
    struct Node {
        std::optional<Label> parent;
        std::vector<Label> children;  // decreasing key order
        bool operator==(const Node&) const = default;
    };

    const Node& node(const Label& v) const {
        auto it = nodes_.find(v);
        if (it == nodes_.end()) throw std::invalid_argument("unknown forest vertex");
        return it->second;
    }

    std::map<Label, Node, Less> nodes_;
    std::vector<Label> roots_;  // decreasing key order
};

}  // namespace gammafree
