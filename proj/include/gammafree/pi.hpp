#pragma once

#include <stdexcept>
#include <vector>

#include "gammafree/forest.hpp"

namespace gammafree {

// Pre-order word of a single tree: the root first, then the pre-order
// words of the child subtrees with children taken in decreasing key
// order.  Rejects forests that are not a single tree.
template <typename Label, typename Less>
std::vector<Label> pre_order(const Forest<Label, Less>& tree) {
    if (tree.roots().size() != 1)
        throw std::invalid_argument("pre_order expects exactly one component");
    std::vector<Label> out;
    out.reserve(tree.size());
    std::vector<Label> todo{tree.roots().front()};
    while (!todo.empty()) {
        Label v = todo.back();
        todo.pop_back();
        out.push_back(v);
        const auto& kids = tree.children(v);
        // Children are stored in decreasing order; push them reversed so
        // the largest child is expanded first.
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) todo.push_back(*it);
    }
    return out;
}

// Increasing forest -> word: concatenates the pre-order words of the
// component trees, components ordered by decreasing root key.  The
// result uses every label exactly once.
template <typename Label, typename Less>
std::vector<Label> pi(const Forest<Label, Less>& forest) {
    if (!forest.is_increasing())
        throw std::invalid_argument("pi expects an increasing forest");
    std::vector<Label> out;
    out.reserve(forest.size());
    for (const Label& root : forest.roots()) {
        std::vector<Label> word = pre_order(forest.subtree(root));
        out.insert(out.end(), word.begin(), word.end());
    }
    return out;
}

// Word -> increasing forest, inverse of pi.  One left-to-right pass
// with a stack holding the path from the current root: a new label
// pops everything larger, then attaches below what remains (or starts
// a new component when the stack empties).  A label s[i+1] therefore
// becomes a child of s[i] exactly when s[i] < s[i+1], i.e. rises of
// the word correspond to leftmost children.
template <typename Label, typename Less = std::less<Label>>
Forest<Label, Less> pi_inverse(const std::vector<Label>& word) {
    Less less;
    std::vector<Label> stack;
    std::vector<std::pair<Label, Label>> edges;
    for (const Label& v : word) {
        while (!stack.empty() && less(v, stack.back())) stack.pop_back();
        if (!stack.empty()) {
            if (!less(stack.back(), v))
                throw std::invalid_argument("pi_inverse word repeats a label");
            edges.emplace_back(stack.back(), v);
        }
        stack.push_back(v);
    }
    return Forest<Label, Less>::from_edges(word, edges);
}

}  // namespace gammafree
