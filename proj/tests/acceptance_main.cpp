// Acceptance gate: ten end-to-end checks over the library and the
// command-line tool, one PASS/FAIL line each.  Exit status 0 only when
// every check passes.  Usage: gammafree_acceptance <path-to-cli>.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gammafree/counting.hpp"
#include "gammafree/enumerate.hpp"
#include "gammafree/gamma.hpp"
#include "gammafree/matrix.hpp"
#include "gammafree/phi.hpp"
#include "gammafree/pi.hpp"
#include "gammafree/psi.hpp"
#include "gammafree/serialize.hpp"
#include "gammafree/series.hpp"
#include "gammafree/verify.hpp"

using namespace gammafree;

namespace {

// Wall-clock budgets pinned for the timed checks.
constexpr double kTableBudgetSeconds = 1.0;
constexpr double kMatrixSweepBudgetSeconds = 60.0;
constexpr double kWordSweepBudgetSeconds = 10.0;
constexpr double kPairSweepBudgetSeconds = 60.0;

bool run_criterion(int number, const std::string& description, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && budget_seconds > 0 && elapsed > budget_seconds) {
        ok = false;
        detail = "exceeded the " + std::to_string(budget_seconds) + "s budget";
    }
    std::printf("[%s] %2d. %s%s%s (%.2fs)\n", ok ? "PASS" : "FAIL", number,
                description.c_str(), detail.empty() ? "" : " -- ", detail.c_str(),
                elapsed);
    std::fflush(stdout);
    return ok;
}

const long kReferenceCounts[6][6] = {
    {1, 1, 1, 1, 1, 1},
    {1, 2, 4, 8, 16, 32},
    {1, 4, 14, 46, 146, 454},
    {1, 8, 46, 230, 1066, 4718},
    {1, 16, 146, 1066, 6902, 41506},
    {1, 32, 454, 4718, 41506, 329462},
};

bool closed_form_counts(std::string& detail) {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k)
            if (poly_bernoulli(n, k) != kReferenceCounts[n][k]) {
                detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
                return false;
            }
    return true;
}

bool matrix_sequence_sweep(std::string& detail) {
    for (int n = 0; n <= 4; ++n) {
        for (int k = 0; k <= 4; ++k) {
            const auto matrices = enumerate_gamma_free(n, k, EnumMode::pruned);
            const auto sequences = enumerate_callan(n, k);
            if (BigInt(matrices.size()) != poly_bernoulli(n, k) ||
                sequences.size() != matrices.size()) {
                detail = "count mismatch at n=" + std::to_string(n) +
                         " k=" + std::to_string(k);
                return false;
            }
            std::set<std::string> images;
            for (const BinaryMatrix& m : matrices) {
                const CallanSequence seq = phi(m);
                if (!images.insert(callan_to_json(seq)).second ||
                    !(phi_inverse(seq) == m)) {
                    detail = "forward round-trip failed at n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
                    return false;
                }
            }
            for (const CallanSequence& seq : sequences)
                if (!(phi(phi_inverse(seq)) == seq)) {
                    detail = "backward round-trip failed at n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
                    return false;
                }
        }
    }
    if (count_gamma_free(5, 5, EnumMode::pruned) != 329462) {
        detail = "5x5 pruned count is off";
        return false;
    }
    return true;
}

bool ones_bound(std::string& detail) {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            for (const BinaryMatrix& m : enumerate_gamma_free(n, k, EnumMode::pruned))
                if (m.one_count() > static_cast<std::size_t>(n + k - 1)) {
                    detail = "violation at n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
                    return false;
                }
    return true;
}

bool word_forest_sweep(std::string& detail) {
    for (int n = 0; n <= 6; ++n) {
        const auto forests = enumerate_increasing_forests(n);
        const auto words = enumerate_permutations(n);
        if (forests.size() != words.size()) {
            detail = "count mismatch at n=" + std::to_string(n);
            return false;
        }
        std::set<std::vector<int>> images;
        for (const Forest<int>& f : forests) {
            const std::vector<int> w = pi(f);
            if (!is_permutation(w) || !images.insert(w).second ||
                !(pi_inverse(w) == f)) {
                detail = "forward failure at n=" + std::to_string(n);
                return false;
            }
        }
        for (const std::vector<int>& w : words)
            if (!(pi(pi_inverse(w)) == w)) {
                detail = "backward failure at n=" + std::to_string(n);
                return false;
            }
    }
    const std::vector<int> word{3, 9, 13, 12, 10, 7, 4, 11, 6, 1, 5, 2, 8};
    std::vector<int> vertices(13);
    for (int i = 0; i < 13; ++i) vertices[i] = i + 1;
    const Forest<int> reference = Forest<int>::from_edges(
        vertices, {{3, 9}, {3, 7}, {3, 4}, {9, 13}, {9, 12}, {9, 10}, {4, 11}, {4, 6},
                   {1, 5}, {1, 2}, {2, 8}});
    if (!(pi_inverse(word) == reference) || pi(reference) != word) {
        detail = "13-element reference failed";
        return false;
    }
    return true;
}

bool no_empty_line_counts(std::string& detail) {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k) {
            long seen = 0;
            for (const BinaryMatrix& m : enumerate_gamma_free(n, k, EnumMode::pruned))
                if (m.empty_row_count() == 0 && m.empty_col_count() == 0) ++seen;
            if (count_naf(n, k) != seen) {
                detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
                return false;
            }
        }
    return true;
}

bool series_coefficients(std::string& detail) {
    const SeriesTable table = egf_gamma_free(5, 5);
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k)
            if (table.entry_at_ones(n, k) != poly_bernoulli(n, k)) {
                detail = "value mismatch at n=" + std::to_string(n) +
                         " k=" + std::to_string(k);
                return false;
            }
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k) {
            MarkerPoly histogram;
            for (const BinaryMatrix& m : enumerate_gamma_free(n, k, EnumMode::naive))
                histogram += MarkerPoly::monomial(
                    MarkerExp{m.empty_row_count(), m.empty_col_count(),
                              m.top_row_count()},
                    1);
            if (!(histogram == table.entry(n, k))) {
                detail = "marker mismatch at n=" + std::to_string(n) +
                         " k=" + std::to_string(k);
                return false;
            }
        }
    return true;
}

bool matrix_pair_sweep(std::string& detail) {
    for (int n = 0; n <= 4; ++n)
        if (!verify_theorem5(n).ok) {
            detail = "class sweep failed at n=" + std::to_string(n);
            return false;
        }
    const auto omegas = omega_numbers(5);
    if (BigInt(enumerate_complete_naf(5).size()) != omegas[5] ||
        BigInt(enumerate_no_common_rise(5).size()) != omegas[5]) {
        detail = "n=5 family sizes disagree with the series";
        return false;
    }
    return true;
}

bool label_discipline_sweep(std::string& detail) {
    for (int n = 0; n <= 4; ++n)
        if (!verify_psi(n).ok) {
            detail = "failed at n=" + std::to_string(n);
            return false;
        }
    return true;
}

bool tree_counts(std::string& detail) {
    const auto trees = bessel_tree_numbers(8);
    for (int n = 0; n <= 4; ++n) {
        long with_single_root = 0;
        for (const BinaryMatrix& m : enumerate_complete_naf(n + 1))
            if (naf_roots(m).size() == 1) ++with_single_root;
        if (trees[n] != with_single_root) {
            detail = "mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    for (const BigInt& value : trees)
        if (value <= 0) {
            detail = "non-positive series value";
            return false;
        }
    return true;
}

struct CliRun {
    bool ran = false;
    int code = -1;
    std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
    CliRun result;
    const std::string command = "'" + cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) {
        result.ran = true;
        result.code = WEXITSTATUS(status);
    }
    return result;
}

bool deterministic_reports(const std::string& cli, std::string& detail) {
    if (cli.empty()) {
        detail = "no command-line binary given";
        return false;
    }
    const std::vector<std::string> targets{
        "verify phi --n 2 --k 2",  "verify pi --n 4",
        "verify psi --n 3",        "verify theorem5 --n 3",
        "verify table1 --max-n 5 --max-k 5", "verify egf --max-n 3 --max-k 3",
    };
    for (const std::string& target : targets) {
        const CliRun first = run_cli(cli, target);
        const CliRun second = run_cli(cli, target);
        if (!first.ran || !second.ran) {
            detail = "could not run: " + target;
            return false;
        }
        if (first.code != 0 || second.code != 0) {
            detail = "nonzero exit for: " + target;
            return false;
        }
        if (first.output.empty() || first.output != second.output) {
            detail = "outputs differ for: " + target;
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    bool all_ok = true;
    auto gate = [&all_ok](int number, const std::string& description,
                          double budget_seconds,
                          const std::function<bool(std::string&)>& body) {
        all_ok = run_criterion(number, description, budget_seconds, body) && all_ok;
    };

    gate(1, "closed-form matrix counts match the reference grid",
         kTableBudgetSeconds, closed_form_counts);
    gate(2, "matrix and sequence enumerations agree and round-trip",
         kMatrixSweepBudgetSeconds, matrix_sequence_sweep);
    gate(3, "enumerated matrices respect the ones bound", 0, ones_bound);
    gate(4, "word-forest correspondence is a bijection", kWordSweepBudgetSeconds,
         word_forest_sweep);
    gate(5, "no-empty-line counts match filtered enumeration", 0,
         no_empty_line_counts);
    gate(6, "series coefficients match counts and enumeration statistics", 0,
         series_coefficients);
    gate(7, "matrix-pair correspondence is a bijection class by class",
         kPairSweepBudgetSeconds, matrix_pair_sweep);
    gate(8, "label-discipline conversion is a bijection class by class", 0,
         label_discipline_sweep);
    gate(9, "tree counts match the logarithmic series", 0, tree_counts);
    gate(10, "verification reports are byte-deterministic", 0,
         [&cli](std::string& detail) { return deterministic_reports(cli, detail); });

    return all_ok ? 0 : 1;
}
