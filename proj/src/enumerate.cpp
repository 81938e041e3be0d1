#include "gammafree/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gammafree/gamma.hpp"

namespace gammafree {

namespace {

void check_cell_budget(int n, int k, EnumMode mode) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("enumeration dimensions must be non-negative");
    const long cells = static_cast<long>(n) * k;
    const long limit = mode == EnumMode::naive ? 16 : 25;
    if (cells > limit)
        throw std::invalid_argument("matrix enumeration limited to " +
                                    std::to_string(limit) + " cells");
}

// Cells in raster order of the text rendering: row n down to 1, column
// k down to 1 inside a row.  Trying '0' before '1' therefore streams
// matrices in ascending text order.
struct PrunedSearch {
    int n, k;
    std::vector<Pos> ones;
    std::vector<int> lowest_one_row;  // per column, 0 = column empty so far
    std::vector<int> rightmost_col;   // per row, k+1 = row empty so far
    const std::function<void(const BinaryMatrix&)>& visit;

    PrunedSearch(int n_, int k_, const std::function<void(const BinaryMatrix&)>& v)
        : n(n_), k(k_), lowest_one_row(static_cast<std::size_t>(k_) + 1, 0),
          rightmost_col(static_cast<std::size_t>(n_) + 1, 0), visit(v) {
        for (int r = 0; r <= n; ++r) rightmost_col[r] = k + 1;
    }

    // Would a 1 at (r, c) complete a Gamma pattern?  Only the lowest 1
    // already in column c can be the upper-left corner of one: any
    // higher candidate together with that lowest 1 would already form
    // a Gamma and have been pruned.
    bool creates_gamma(int r, int c) const {
        (void)r;
        const int low = lowest_one_row[c];
        return low != 0 && rightmost_col[low] < c;
    }

    void run(int cell) {
        if (cell == n * k) {
            visit(BinaryMatrix(n, k, ones));
            return;
        }
        const int r = n - cell / k;
        const int c = k - cell % k;
        run(cell + 1);  // leave the cell at 0
        if (!creates_gamma(r, c)) {
            ones.push_back(Pos{r, c});
            const int saved_low = lowest_one_row[c];
            const int saved_right = rightmost_col[r];
            lowest_one_row[c] = r;
            rightmost_col[r] = c;
            run(cell + 1);
            lowest_one_row[c] = saved_low;
            rightmost_col[r] = saved_right;
            ones.pop_back();
        }
    }
};

}  // namespace

void for_each_gamma_free(int n, int k, EnumMode mode,
                         const std::function<void(const BinaryMatrix&)>& visit) {
    check_cell_budget(n, k, mode);
    if (mode == EnumMode::pruned) {
        PrunedSearch search(n, k, visit);
        search.run(0);
        return;
    }
    const int cells = n * k;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        std::vector<Pos> ones;
        for (int cell = 0; cell < cells; ++cell) {
            // The first cell in raster order sits at the highest bit so
            // that ascending masks match ascending text renderings.
            if (mask >> (cells - 1 - cell) & 1)
                ones.push_back(Pos{n - cell / k, k - cell % k});
        }
        const BinaryMatrix m(n, k, std::move(ones));
        if (is_gamma_free(m)) visit(m);
    }
}

std::vector<BinaryMatrix> enumerate_gamma_free(int n, int k, EnumMode mode) {
    std::vector<BinaryMatrix> out;
    for_each_gamma_free(n, k, mode, [&out](const BinaryMatrix& m) { out.push_back(m); });
    return out;
}

std::uint64_t count_gamma_free(int n, int k, EnumMode mode) {
    std::uint64_t count = 0;
    for_each_gamma_free(n, k, mode, [&count](const BinaryMatrix&) { ++count; });
    return count;
}

namespace {

std::string callan_sort_key(const CallanSequence& seq) {
    std::ostringstream out;
    for (const SetPair& p : seq.pairs()) {
        out << "(";
        for (int v : p.rows) out << v << ",";
        out << "|";
        for (int v : p.cols) out << v << ",";
        out << ")";
    }
    return out.str();
}

// Extends the sequence by every pair of nonempty subsets drawn from
// the still-unused labels; every prefix is itself a valid sequence, so
// each sequence is produced exactly once.
void extend_callan(int n, int k, unsigned rows_free, unsigned cols_free,
                   std::vector<SetPair>& current, std::vector<CallanSequence>& out) {
    out.emplace_back(n, k, current);
    for (unsigned s = rows_free; s != 0; s = (s - 1) & rows_free) {
        for (unsigned t = cols_free; t != 0; t = (t - 1) & cols_free) {
            SetPair pair;
            for (int v = 0; v < n; ++v)
                if (s >> v & 1) pair.rows.push_back(v + 1);
            for (int v = 0; v < k; ++v)
                if (t >> v & 1) pair.cols.push_back(v + 1);
            current.push_back(std::move(pair));
            extend_callan(n, k, rows_free & ~s, cols_free & ~t, current, out);
            current.pop_back();
        }
    }
}

}  // namespace

std::vector<CallanSequence> enumerate_callan(int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("enumeration dimensions must be non-negative");
    if (static_cast<long>(n) * k > 25)
        throw std::invalid_argument("callan enumeration limited to 25 cells");
    std::vector<CallanSequence> collected;
    std::vector<SetPair> current;
    extend_callan(n, k, (1u << n) - 1, (1u << k) - 1, current, collected);
    std::vector<std::pair<std::string, std::size_t>> keyed;
    keyed.reserve(collected.size());
    for (std::size_t i = 0; i < collected.size(); ++i)
        keyed.emplace_back(callan_sort_key(collected[i]), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<CallanSequence> out;
    out.reserve(collected.size());
    for (const auto& [key, index] : keyed) {
        (void)key;
        out.push_back(std::move(collected[index]));
    }
    return out;
}

namespace {

void extend_forest(const std::vector<int>& labels, std::size_t index,
                   std::vector<int>& parent_choice, std::vector<Forest<int>>& out) {
    if (index == labels.size()) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (parent_choice[i] >= 0)
                edges.emplace_back(labels[parent_choice[i]], labels[i]);
        out.push_back(Forest<int>::from_edges(labels, edges));
        return;
    }
    // Root first, then the smaller labels in ascending order.
    for (int choice = -1; choice < static_cast<int>(index); ++choice) {
        parent_choice[index] = choice;
        extend_forest(labels, index + 1, parent_choice, out);
    }
}

}  // namespace

std::vector<Forest<int>> enumerate_increasing_forests(const std::vector<int>& labels) {
    if (labels.size() > 7)
        throw std::invalid_argument("forest enumeration limited to 7 labels");
    std::vector<int> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("forest labels must be distinct");
    std::vector<Forest<int>> out;
    std::vector<int> parent_choice(sorted.size(), -1);
    extend_forest(sorted, 0, parent_choice, out);
    return out;
}

std::vector<Forest<int>> enumerate_increasing_forests(int n) {
    if (n < 0) throw std::invalid_argument("label count must be non-negative");
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    return enumerate_increasing_forests(labels);
}

std::vector<PointForest> enumerate_increasing_point_forests(const std::vector<int>& eta) {
    const std::vector<Point> points = points_of_eta(eta);
    std::vector<PointForest> out;
    for (const Forest<int>& f : enumerate_increasing_forests(static_cast<int>(eta.size()))) {
        auto point = [&eta](int row) { return Point{row, eta[row - 1]}; };
        std::vector<std::pair<Point, Point>> edges;
        for (int v : f.vertices())
            if (auto p = f.parent(v)) edges.emplace_back(point(*p), point(v));
        out.push_back(PointForest::from_edges(points, edges));
    }
    return out;
}

std::vector<PointForest> enumerate_point_forests(const std::vector<int>& eta,
                                                 PointForestKind kind) {
    std::vector<PointForest> out;
    for (const PointForest& f : enumerate_increasing_point_forests(eta)) {
        const bool keep = kind == PointForestKind::properly_labeled
                              ? is_properly_labeled(f)
                              : is_leftmost_valid(f);
        if (keep) out.push_back(f);
    }
    return out;
}

std::vector<BinaryMatrix> enumerate_complete_naf(int n) {
    if (n < 0 || n > 5)
        throw std::invalid_argument("complete matrix enumeration limited to n <= 5");
    std::vector<BinaryMatrix> out;
    for_each_gamma_free(n, n, EnumMode::pruned, [&out](const BinaryMatrix& m) {
        if (is_complete_naf(m)) out.push_back(m);
    });
    return out;
}

std::vector<std::vector<int>> enumerate_permutations(int n) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("permutation enumeration limited to n <= 7");
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<PermPair> enumerate_no_common_rise(int n) {
    if (n < 0 || n > 5)
        throw std::invalid_argument("pair enumeration limited to n <= 5");
    const std::vector<std::vector<int>> perms = enumerate_permutations(n);
    std::vector<PermPair> out;
    for (const std::vector<int>& alpha : perms)
        for (const std::vector<int>& beta : perms) {
            PermPair pair(alpha, beta);
            if (!has_common_rise(pair)) out.push_back(std::move(pair));
        }
    return out;
}

}  // namespace gammafree
