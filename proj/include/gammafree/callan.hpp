#pragma once

#include <cstddef>
#include <vector>

namespace gammafree {

// One element of a Callan sequence: a nonempty set of row labels and a
// nonempty set of column labels, both stored ascending.
struct SetPair {
    std::vector<int> rows;
    std::vector<int> cols;
    bool operator==(const SetPair&) const = default;
};

// An (n,k)-Callan sequence: an ordered list of SetPairs whose row sets
// are pairwise disjoint nonempty subsets of {1..n} and whose column
// sets are pairwise disjoint nonempty subsets of {1..k}.  The empty
// sequence is valid; the length can never exceed min(n,k).
class CallanSequence {
public:
    CallanSequence() = default;  // the empty (0,0)-sequence
    CallanSequence(int n, int k, std::vector<SetPair> pairs);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<SetPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    bool rows_cover_all() const;  // the row sets partition {1..n}
    bool cols_cover_all() const;  // the column sets partition {1..k}

    bool operator==(const CallanSequence&) const = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<SetPair> pairs_;  // each set sorted ascending
};

}  // namespace gammafree
