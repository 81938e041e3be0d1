#pragma once

#include <string>
#include <vector>

namespace gammafree {

// One detail line of a self-check.
struct VerifyLine {
    bool ok = true;
    std::string text;
    bool operator==(const VerifyLine&) const = default;
};

// Outcome of a self-check: every detail line is kept, failures do not
// stop the remaining checks.
struct VerifyReport {
    bool ok = true;
    std::vector<VerifyLine> lines;

    void pass(std::string text);
    void fail(std::string text);
    std::string to_text() const;  // one line per entry, "FAIL: " prefix on failures
};

// Round-trips the matrix <-> Callan sequence maps over every Gamma-free
// n x k matrix and every (n,k)-Callan sequence (n*k <= 25), checking
// the counts against the closed formula and the images for injectivity.
VerifyReport verify_phi(int n, int k);

// Round-trips the increasing-forest <-> permutation maps over all of
// S_n and all forests on {1..n} (n <= 7), plus a fixed 13-element
// reference word with a known forest.
VerifyReport verify_pi(int n);

// For every permutation eta of {1..n} (n <= 4): the label-discipline
// conversion maps the leftmost-valid forests on {(i, eta_i)}
// bijectively onto the properly labeled ones, its inverse matches
// inversion by exhaustive search on single trees, and the forest maps
// round-trip both ways.
VerifyReport verify_psi(int n);

// For every permutation eta of {1..n} (n <= 5): the complete n x n
// matrices with top permutation eta map bijectively onto the pairs
// (sigma, eta o sigma) with no common rise, with both compositions the
// identity; the totals must match the reciprocal-Bessel coefficient.
VerifyReport verify_theorem5(int n);

// Gamma-free counts against the frozen reference grid (indices <= 5)
// and against brute-force enumeration on shapes of at most 16 cells.
VerifyReport verify_table1(int max_n, int max_k);

// Generating-series coefficients against the closed formula at
// a = b = t = 1 for all n <= max_n, k <= max_k, and the marker-refined
// counts against classified enumeration on shapes of dimension <= 3.
VerifyReport verify_egf(int max_n, int max_k);

}  // namespace gammafree
