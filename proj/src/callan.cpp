#include "gammafree/callan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gammafree {

namespace {

// Sorts one label set and checks it is a nonempty subset of {1..limit}
// disjoint from everything seen before.
void absorb_set(std::vector<int>& labels, int limit, std::set<int>& seen,
                const char* what) {
    if (labels.empty())
        throw std::invalid_argument(std::string(what) + " set must be nonempty");
    std::sort(labels.begin(), labels.end());
    int prev = 0;
    for (int v : labels) {
        if (v < 1 || v > limit)
            throw std::invalid_argument(std::string(what) + " label out of range");
        if (v == prev)
            throw std::invalid_argument(std::string(what) + " label repeated in a set");
        if (!seen.insert(v).second)
            throw std::invalid_argument(std::string(what) + " sets are not disjoint");
        prev = v;
    }
}

}  // namespace

CallanSequence::CallanSequence(int n, int k, std::vector<SetPair> pairs)
    : n_(n), k_(k), pairs_(std::move(pairs)) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("callan bounds must be non-negative");
    std::set<int> seen_rows, seen_cols;
    for (SetPair& p : pairs_) {
        absorb_set(p.rows, n_, seen_rows, "row");
        absorb_set(p.cols, k_, seen_cols, "column");
    }
}

bool CallanSequence::rows_cover_all() const {
    std::size_t total = 0;
    for (const SetPair& p : pairs_) total += p.rows.size();
    return total == static_cast<std::size_t>(n_);
}

bool CallanSequence::cols_cover_all() const {
    std::size_t total = 0;
    for (const SetPair& p : pairs_) total += p.cols.size();
    return total == static_cast<std::size_t>(k_);
}

}  // namespace gammafree
