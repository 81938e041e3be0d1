// Python surface for the gammafree core: string- and int-based
// wrappers around the matrix/sequence/forest/pair conversions, the
// exact counting routines, and the self-verification sweeps.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
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

namespace py = pybind11;
using namespace gammafree;

namespace {

py::int_ to_py(const BigInt& value) {
    PyObject* raw = PyLong_FromString(value.str().c_str(), nullptr, 10);
    if (raw == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(raw);
}

py::list to_py_list(const std::vector<BigInt>& values) {
    py::list out;
    for (const BigInt& v : values) out.append(to_py(v));
    return out;
}

BinaryMatrix parse_matrix(const std::string& text, std::optional<int> rows,
                          std::optional<int> cols) {
    if (rows && cols) return BinaryMatrix::parse(text, *rows, *cols);
    return BinaryMatrix::parse(text);
}

EnumMode mode_of(const std::string& name) {
    if (name == "naive") return EnumMode::naive;
    if (name == "pruned") return EnumMode::pruned;
    throw std::invalid_argument("mode must be \"naive\" or \"pruned\"");
}

std::pair<bool, std::string> report_of(const VerifyReport& report) {
    return {report.ok, report.to_text()};
}

}  // namespace

PYBIND11_MODULE(_gammafree, m) {
    m.doc() = "Gamma-free matrix bijections: exact counting, conversions "
              "and self-verification";

    m.def(
        "is_gamma_free",
        [](const std::string& text, std::optional<int> rows, std::optional<int> cols) {
            return is_gamma_free(parse_matrix(text, rows, cols));
        },
        py::arg("matrix"), py::arg("rows") = std::nullopt, py::arg("cols") = std::nullopt,
        "True when the 0-1 matrix text avoids the forbidden corner pattern.");

    m.def(
        "gamma_witness",
        [](const std::string& text, std::optional<int> rows,
           std::optional<int> cols) -> py::object {
            const auto witness = find_gamma_witness(parse_matrix(text, rows, cols));
            if (!witness) return py::none();
            auto pos = [](const Pos& p) { return py::make_tuple(p.row, p.col); };
            return py::make_tuple(pos(witness->upper_left), pos(witness->upper_right),
                                  pos(witness->lower_left));
        },
        py::arg("matrix"), py::arg("rows") = std::nullopt, py::arg("cols") = std::nullopt,
        "The lexicographically smallest forbidden corner triple, or None.");

    m.def(
        "matrix_to_callan",
        [](const std::string& text, std::optional<int> rows, std::optional<int> cols) {
            return callan_to_json(phi(parse_matrix(text, rows, cols)));
        },
        py::arg("matrix"), py::arg("rows") = std::nullopt, py::arg("cols") = std::nullopt,
        "Encode a Gamma-free matrix as its sequence of row/column set pairs (JSON).");

    m.def(
        "callan_to_matrix",
        [](const std::string& json, std::optional<int> n, std::optional<int> k) {
            return phi_inverse(callan_from_json(json, n, k)).render();
        },
        py::arg("json"), py::arg("n") = std::nullopt, py::arg("k") = std::nullopt,
        "Rebuild the Gamma-free matrix text from a sequence in JSON form.");

    m.def(
        "perm_to_forest",
        [](const std::vector<int>& word) { return forest_to_json(pi_inverse(word)); },
        py::arg("perm"),
        "Decode a permutation word into its increasing forest (JSON).");

    m.def(
        "forest_to_perm",
        [](const std::string& json) { return pi(forest_from_json(json)); },
        py::arg("json"), "Read an increasing forest back off as a permutation word.");

    m.def(
        "matrix_to_permpair",
        [](const std::string& text, std::optional<int> rows, std::optional<int> cols) {
            const PermPair pair = matrix_to_pair(parse_matrix(text, rows, cols));
            return py::make_tuple(pair.alpha(), pair.beta());
        },
        py::arg("matrix"), py::arg("rows") = std::nullopt, py::arg("cols") = std::nullopt,
        "Complete matrix -> pair of permutations with no common rise.");

    m.def(
        "permpair_to_matrix",
        [](const std::vector<int>& alpha, const std::vector<int>& beta) {
            return pair_to_matrix(PermPair(alpha, beta)).render();
        },
        py::arg("alpha"), py::arg("beta"),
        "Pair of permutations with no common rise -> complete matrix text.");

    m.def(
        "has_common_rise",
        [](const std::vector<int>& alpha, const std::vector<int>& beta) {
            return has_common_rise(PermPair(alpha, beta));
        },
        py::arg("alpha"), py::arg("beta"),
        "True when the two permutations rise at a common position.");

    m.def(
        "stirling2", [](int n, int m) { return to_py(stirling2(n, m)); }, py::arg("n"),
        py::arg("m"), "Partitions of an n-set into m nonempty blocks.");

    m.def(
        "poly_bernoulli", [](int n, int k) { return to_py(poly_bernoulli(n, k)); },
        py::arg("n"), py::arg("k"), "Number of n x k Gamma-free 0-1 matrices.");

    m.def(
        "count_naf", [](int n, int k) { return to_py(count_naf(n, k)); }, py::arg("n"),
        py::arg("k"), "Gamma-free matrices without all-zero rows or columns.");

    m.def(
        "omega_numbers", [](int max_n) { return to_py_list(omega_numbers(max_n)); },
        py::arg("max_n"),
        "Counts of permutation pairs with no common rise, orders 0..max_n.");

    m.def(
        "bessel_tree_numbers",
        [](int max_n) { return to_py_list(bessel_tree_numbers(max_n)); },
        py::arg("max_n"),
        "Counts of complete trees by internal vertices, orders 0..max_n.");

    m.def(
        "count_gamma_free",
        [](int n, int k, const std::string& mode) {
            return count_gamma_free(n, k, mode_of(mode));
        },
        py::arg("n"), py::arg("k"), py::arg("mode") = "pruned",
        "Count the Gamma-free matrices by explicit enumeration.");

    m.def(
        "verify_phi", [](int n, int k) { return report_of(verify_phi(n, k)); },
        py::arg("n"), py::arg("k"),
        "Matrix <-> sequence sweep; returns (ok, report_text).");
    m.def(
        "verify_pi", [](int n) { return report_of(verify_pi(n)); }, py::arg("n"),
        "Permutation <-> forest sweep; returns (ok, report_text).");
    m.def(
        "verify_psi", [](int n) { return report_of(verify_psi(n)); }, py::arg("n"),
        "Labeling-discipline conversion sweep; returns (ok, report_text).");
    m.def(
        "verify_theorem5", [](int n) { return report_of(verify_theorem5(n)); },
        py::arg("n"), "Complete matrix <-> pair sweep; returns (ok, report_text).");
    m.def(
        "verify_table1", [](int max_n, int max_k) {
            return report_of(verify_table1(max_n, max_k));
        },
        py::arg("max_n"), py::arg("max_k"),
        "Closed-form counts against the stored reference grid.");
    m.def(
        "verify_egf", [](int max_n, int max_k) {
            return report_of(verify_egf(max_n, max_k));
        },
        py::arg("max_n"), py::arg("max_k"),
        "Series coefficients against counts and enumeration statistics.");
}
