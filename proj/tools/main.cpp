// Command line front end: every subcommand is a thin adapter over the
// library, translating flags to calls and results to text or records.
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

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

namespace {

using gammafree::BigInt;
using gammafree::BinaryMatrix;
using gammafree::CallanSequence;
using gammafree::Forest;
using gammafree::MarkerPoly;
using gammafree::PermPair;
using gammafree::PointForest;
using gammafree::SeriesTable;
using gammafree::VerifyReport;
using nlohmann::json;

struct Options {
    std::string format = "table";
    bool records() const { return format == "records"; }
};

// Input text for the convert subcommands: --file wins, otherwise stdin.
std::string read_input(const std::string& file) {
    std::ostringstream buffer;
    if (file.empty()) {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open input file: " + file);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void emit_error(const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

json matrix_record(const BinaryMatrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"matrix", m.render()}};
}

void print_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += std::string(width[i] - row[i].size(), ' ');
            line += row[i];
        }
        std::cout << line << "\n";
    }
}

int run_count(const Options& opt, const std::string& kind, int n, int k) {
    const BigInt value =
        kind == "poly-bernoulli" ? gammafree::poly_bernoulli(n, k) : gammafree::count_naf(n, k);
    if (opt.records())
        std::cout << json{{"op", "count"}, {"kind", kind}, {"n", n}, {"k", k},
                          {"value", value.str()}}
                         .dump()
                  << "\n";
    else
        std::cout << value.str() << "\n";
    return 0;
}

int run_series_grid(const Options& opt, int max_n, int max_k, bool markers) {
    const SeriesTable table = gammafree::egf_gamma_free(max_n, max_k);
    if (opt.records()) {
        for (int n = 0; n <= max_n; ++n)
            for (int k = 0; k <= max_k; ++k) {
                json record{{"op", "series"}, {"kind", "gamma-free"}, {"n", n}, {"k", k},
                            {"value", table.entry_at_ones(n, k).str()}};
                if (markers) record["markers"] = table.entry(n, k).to_string();
                std::cout << record.dump() << "\n";
            }
        return 0;
    }
    if (markers) {
        for (int n = 0; n <= max_n; ++n)
            for (int k = 0; k <= max_k; ++k)
                std::cout << "n=" << n << " k=" << k << ": "
                          << table.entry(n, k).to_string() << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<std::string> row;
        for (int k = 0; k <= max_k; ++k) row.push_back(table.entry_at_ones(n, k).str());
        rows.push_back(std::move(row));
    }
    print_aligned(rows);
    return 0;
}

int run_series_list(const Options& opt, const std::string& kind, int max_n) {
    const std::vector<BigInt> values = kind == "omega"
                                           ? gammafree::omega_numbers(max_n)
                                           : gammafree::bessel_tree_numbers(max_n);
    if (opt.records()) {
        for (int n = 0; n <= max_n; ++n)
            std::cout << json{{"op", "series"}, {"kind", kind}, {"n", n},
                              {"value", values[static_cast<std::size_t>(n)].str()}}
                             .dump()
                      << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= max_n; ++n)
        rows.push_back({std::to_string(n), values[static_cast<std::size_t>(n)].str()});
    print_aligned(rows);
    return 0;
}

int count_only_output(const Options& opt, const std::string& family, std::size_t count) {
    if (opt.records())
        std::cout << json{{"op", "enumerate"}, {"family", family},
                          {"count", std::to_string(count)}}
                         .dump()
                  << "\n";
    else
        std::cout << count << "\n";
    return 0;
}

int run_enumerate_matrices(const Options& opt, const std::string& family,
                           const std::vector<BinaryMatrix>& matrices, bool count_only) {
    if (count_only) return count_only_output(opt, family, matrices.size());
    for (const BinaryMatrix& m : matrices) {
        if (opt.records())
            std::cout << matrix_record(m).dump() << "\n";
        else
            std::cout << m.render() << "\n";
    }
    return 0;
}

int run_convert(const Options& opt, const std::string& direction, const std::string& file,
                std::optional<int> n, std::optional<int> k) {
    const std::string input = read_input(file);
    auto parse_matrix = [&]() {
        return n && k ? BinaryMatrix::parse(input, *n, *k) : BinaryMatrix::parse(input);
    };
    if (direction == "matrix-to-callan") {
        const CallanSequence seq = gammafree::phi(parse_matrix());
        std::cout << gammafree::callan_to_json(seq) << "\n";
        return 0;
    }
    if (direction == "callan-to-matrix") {
        const CallanSequence seq = gammafree::callan_from_json(input, n, k);
        const BinaryMatrix m = gammafree::phi_inverse(seq);
        if (opt.records())
            std::cout << matrix_record(m).dump() << "\n";
        else
            std::cout << m.render();
        return 0;
    }
    if (direction == "perm-to-forest") {
        const Forest<int> forest = gammafree::pi_inverse(gammafree::parse_int_line(input));
        std::cout << gammafree::forest_to_json(forest) << "\n";
        return 0;
    }
    if (direction == "forest-to-perm") {
        const std::vector<int> word = gammafree::pi(gammafree::forest_from_json(input));
        if (opt.records())
            std::cout << json{{"perm", word}}.dump() << "\n";
        else
            std::cout << gammafree::int_line(word) << "\n";
        return 0;
    }
    if (direction == "matrix-to-permpair") {
        const PermPair pair = gammafree::matrix_to_pair(parse_matrix());
        if (opt.records())
            std::cout << json{{"alpha", pair.alpha()}, {"beta", pair.beta()}}.dump() << "\n";
        else
            std::cout << gammafree::perm_pair_to_text(pair);
        return 0;
    }
    // permpair-to-matrix
    const BinaryMatrix m = gammafree::pair_to_matrix(gammafree::perm_pair_from_text(input));
    if (opt.records())
        std::cout << matrix_record(m).dump() << "\n";
    else
        std::cout << m.render();
    return 0;
}

int run_verify(const Options& opt, const std::string& target,
               const std::function<VerifyReport()>& check) {
    const VerifyReport report = check();
    if (opt.records()) {
        for (const gammafree::VerifyLine& line : report.lines)
            std::cout << json{{"ok", line.ok}, {"text", line.text}}.dump() << "\n";
        std::cout << json{{"op", "verify"}, {"target", target}, {"ok", report.ok}}.dump()
                  << "\n";
    } else {
        std::cout << report.to_text();
    }
    if (!report.ok) {
        emit_error("verification", target + " verification failed");
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gamma-free matrix bijections: exact counting, enumeration, conversion "
                 "and self-verification"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format: table or records")
        ->check(CLI::IsMember({"table", "records"}))
        ->capture_default_str();

    std::function<int()> action;
    int n = 0, k = 0, max_n = 0, max_k = 0;
    std::optional<int> opt_n, opt_k;
    std::vector<int> eta;
    std::string kind, file;
    std::string mode = "pruned";
    bool count_only = false, markers = false;

    // count
    CLI::App* count = app.add_subcommand("count", "Closed-formula counts");
    count->require_subcommand(1)->fallthrough();
    for (const std::string name : {"poly-bernoulli", "naf"}) {
        CLI::App* sub = count->add_subcommand(
            name, name == std::string("poly-bernoulli")
                      ? "Number of Gamma-free n x k matrices"
                      : "Number of Gamma-free n x k matrices without all-zero lines");
        sub->fallthrough();
        sub->add_option("--n", n, "Row count")->required();
        sub->add_option("--k", k, "Column count")->required();
        sub->callback([&action, &opt, &n, &k, name] {
            action = [&opt, &n, &k, name] { return run_count(opt, name, n, k); };
        });
    }

    // series
    CLI::App* series = app.add_subcommand("series", "Truncated generating series");
    series->require_subcommand(1)->fallthrough();
    {
        CLI::App* grid = series->add_subcommand(
            "gamma-free", "Bivariate series of Gamma-free matrix counts");
        grid->fallthrough();
        grid->add_option("--max-n", max_n, "Row truncation order")->required();
        grid->add_option("--max-k", max_k, "Column truncation order")->required();
        grid->add_flag("--markers", markers,
                       "Refine by all-zero rows (a), all-zero columns (b), top rows (t)");
        grid->callback([&] {
            action = [&] { return run_series_grid(opt, max_n, max_k, markers); };
        });
    }
    for (const std::string name : {"omega", "bessel"}) {
        CLI::App* sub = series->add_subcommand(
            name, name == std::string("omega")
                      ? "Pairs of permutations with no common rise"
                      : "Complete non-ambiguous trees by internal vertices");
        sub->fallthrough();
        sub->add_option("--max-n", max_n, "Truncation order")->required();
        sub->callback([&action, &opt, &max_n, name] {
            action = [&opt, &max_n, name] { return run_series_list(opt, name, max_n); };
        });
    }

    // enumerate
    CLI::App* enumerate = app.add_subcommand("enumerate", "Exhaustive object streams");
    enumerate->require_subcommand(1)->fallthrough();
    {
        CLI::App* sub = enumerate->add_subcommand("gamma-free", "All Gamma-free matrices");
        sub->fallthrough();
        sub->add_option("--n", n, "Row count")->required();
        sub->add_option("--k", k, "Column count")->required();
        sub->add_option("--mode", mode, "Search strategy: naive or pruned")
            ->check(CLI::IsMember({"naive", "pruned"}))
            ->capture_default_str();
        sub->add_flag("--count-only", count_only, "Print only the cardinality");
        sub->callback([&] {
            action = [&] {
                const auto m = mode == "naive" ? gammafree::EnumMode::naive
                                               : gammafree::EnumMode::pruned;
                if (count_only)
                    return count_only_output(opt, "gamma-free",
                                             gammafree::count_gamma_free(n, k, m));
                return run_enumerate_matrices(opt, "gamma-free",
                                              gammafree::enumerate_gamma_free(n, k, m),
                                              false);
            };
        });
    }
    {
        CLI::App* sub = enumerate->add_subcommand("callan", "All Callan sequences");
        sub->fallthrough();
        sub->add_option("--n", n, "Row label bound")->required();
        sub->add_option("--k", k, "Column label bound")->required();
        sub->add_flag("--count-only", count_only, "Print only the cardinality");
        sub->callback([&] {
            action = [&] {
                const auto sequences = gammafree::enumerate_callan(n, k);
                if (count_only) return count_only_output(opt, "callan", sequences.size());
                for (const CallanSequence& seq : sequences)
                    std::cout << gammafree::callan_to_json(seq) << "\n";
                return 0;
            };
        });
    }
    {
        CLI::App* sub =
            enumerate->add_subcommand("increasing-forests", "All increasing forests on 1..n");
        sub->fallthrough();
        sub->add_option("--n", n, "Label count")->required();
        sub->add_flag("--count-only", count_only, "Print only the cardinality");
        sub->callback([&] {
            action = [&] {
                const auto forests = gammafree::enumerate_increasing_forests(n);
                if (count_only)
                    return count_only_output(opt, "increasing-forests", forests.size());
                for (const Forest<int>& f : forests)
                    std::cout << gammafree::forest_to_json(f) << "\n";
                return 0;
            };
        });
    }
    {
        CLI::App* sub = enumerate->add_subcommand(
            "point-forests", "Increasing point forests on {(i, eta_i)} by discipline");
        sub->fallthrough();
        sub->add_option("--eta", eta, "Permutation, e.g. --eta 3 1 2")->required()->expected(-1);
        sub->add_option("--kind", kind, "properly-labeled or leftmost-valid")
            ->check(CLI::IsMember({"properly-labeled", "leftmost-valid"}))
            ->required();
        sub->add_flag("--count-only", count_only, "Print only the cardinality");
        sub->callback([&] {
            action = [&] {
                const auto which = kind == "properly-labeled"
                                       ? gammafree::PointForestKind::properly_labeled
                                       : gammafree::PointForestKind::leftmost_valid;
                const auto forests = gammafree::enumerate_point_forests(eta, which);
                if (count_only) return count_only_output(opt, "point-forests", forests.size());
                for (const PointForest& f : forests)
                    std::cout << gammafree::point_forest_to_json(f) << "\n";
                return 0;
            };
        });
    }
    {
        CLI::App* sub = enumerate->add_subcommand(
            "complete-naf", "Square complete matrices (top-1 set = leading-1 set)");
        sub->fallthrough();
        sub->add_option("--n", n, "Matrix size")->required();
        sub->add_flag("--count-only", count_only, "Print only the cardinality");
        sub->callback([&] {
            action = [&] {
                return run_enumerate_matrices(opt, "complete-naf",
                                              gammafree::enumerate_complete_naf(n),
                                              count_only);
            };
        });
    }
    {
        CLI::App* sub = enumerate->add_subcommand(
            "no-common-rise", "Pairs of permutations with no common rise");
        sub->fallthrough();
        sub->add_option("--n", n, "Permutation length")->required();
        sub->add_flag("--count-only", count_only, "Print only the cardinality");
        sub->callback([&] {
            action = [&] {
                const auto pairs = gammafree::enumerate_no_common_rise(n);
                if (count_only) return count_only_output(opt, "no-common-rise", pairs.size());
                for (const PermPair& p : pairs) {
                    if (opt.records())
                        std::cout << json{{"alpha", p.alpha()}, {"beta", p.beta()}}.dump()
                                  << "\n";
                    else
                        std::cout << gammafree::int_line(p.alpha()) << " | "
                                  << gammafree::int_line(p.beta()) << "\n";
                }
                return 0;
            };
        });
    }

    // convert
    CLI::App* convert = app.add_subcommand("convert", "Apply a bijection to one object");
    convert->require_subcommand(1)->fallthrough();
    for (const std::string name : {"matrix-to-callan", "callan-to-matrix", "perm-to-forest",
                                   "forest-to-perm", "matrix-to-permpair",
                                   "permpair-to-matrix"}) {
        CLI::App* sub = convert->add_subcommand(name, "");
        sub->fallthrough();
        sub->add_option("--file", file, "Read input from this file instead of stdin");
        sub->add_option("--n", opt_n, "Row bound for inputs that need one");
        sub->add_option("--k", opt_k, "Column bound for inputs that need one");
        sub->callback([&action, &opt, &file, &opt_n, &opt_k, name] {
            action = [&opt, &file, &opt_n, &opt_k, name] {
                return run_convert(opt, name, file, opt_n, opt_k);
            };
        });
    }

    // verify
    CLI::App* verify = app.add_subcommand("verify", "Exhaustive self-checks");
    verify->require_subcommand(1)->fallthrough();
    {
        CLI::App* sub = verify->add_subcommand(
            "phi", "Matrix <-> Callan sequence round-trips over a full size class");
        sub->fallthrough();
        sub->add_option("--n", n, "Row count")->required();
        sub->add_option("--k", k, "Column count")->required();
        sub->callback([&] {
            action = [&] {
                return run_verify(opt, "phi", [&] { return gammafree::verify_phi(n, k); });
            };
        });
    }
    {
        CLI::App* sub = verify->add_subcommand(
            "pi", "Increasing forest <-> permutation round-trips over S_n");
        sub->fallthrough();
        sub->add_option("--n", n, "Label count")->required();
        sub->callback([&] {
            action = [&] {
                return run_verify(opt, "pi", [&] { return gammafree::verify_pi(n); });
            };
        });
    }
    {
        CLI::App* sub = verify->add_subcommand(
            "psi", "Label-discipline conversion checks for every eta in S_n");
        sub->fallthrough();
        sub->add_option("--n", n, "Permutation length")->required();
        sub->callback([&] {
            action = [&] {
                return run_verify(opt, "psi", [&] { return gammafree::verify_psi(n); });
            };
        });
    }
    {
        CLI::App* sub = verify->add_subcommand(
            "theorem5", "Complete matrices <-> no-common-rise pairs for every eta");
        sub->fallthrough();
        sub->add_option("--n", n, "Matrix size")->required();
        sub->callback([&] {
            action = [&] {
                return run_verify(opt, "theorem5",
                                  [&] { return gammafree::verify_theorem5(n); });
            };
        });
    }
    {
        CLI::App* sub = verify->add_subcommand(
            "table1", "Counts against the frozen reference grid and enumeration");
        sub->fallthrough();
        sub->add_option("--max-n", max_n, "Largest row count")->required();
        sub->add_option("--max-k", max_k, "Largest column count")->required();
        sub->callback([&] {
            action = [&] {
                return run_verify(opt, "table1",
                                  [&] { return gammafree::verify_table1(max_n, max_k); });
            };
        });
    }
    {
        CLI::App* sub = verify->add_subcommand(
            "egf", "Series coefficients against formula and classified enumeration");
        sub->fallthrough();
        sub->add_option("--max-n", max_n, "Row truncation order")->required();
        sub->add_option("--max-k", max_k, "Column truncation order")->required();
        sub->callback([&] {
            action = [&] {
                return run_verify(opt, "egf",
                                  [&] { return gammafree::verify_egf(max_n, max_k); });
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        emit_error("usage", e.what());
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::invalid_argument& e) {
        emit_error("usage", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 2;
    }
}
