#include "gammafree/series.hpp"

#include <sstream>
#include <stdexcept>

namespace gammafree {

namespace {

BigInt to_integer(const BigRat& value, const char* what) {
    if (boost::multiprecision::denominator(value) != 1)
        throw std::logic_error(std::string(what) + " is not an integer");
    return boost::multiprecision::numerator(value);
}

}  // namespace

MarkerPoly MarkerPoly::constant(const BigRat& value) {
    return monomial(MarkerExp{}, value);
}

MarkerPoly MarkerPoly::monomial(const MarkerExp& exp, const BigRat& coeff) {
    MarkerPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

MarkerPoly& MarkerPoly::operator+=(const MarkerPoly& other) {
    for (const auto& [exp, coeff] : other.terms_) {
        BigRat& slot = terms_[exp];
        slot += coeff;
        if (slot == 0) terms_.erase(exp);
    }
    return *this;
}

MarkerPoly MarkerPoly::operator*(const MarkerPoly& other) const {
    MarkerPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            const MarkerExp exp{ea.a + eb.a, ea.b + eb.b, ea.t + eb.t};
            BigRat& slot = out.terms_[exp];
            slot += ca * cb;
            if (slot == 0) out.terms_.erase(exp);
        }
    }
    return out;
}

MarkerPoly MarkerPoly::operator*(const BigRat& scalar) const {
    MarkerPoly out;
    if (scalar == 0) return out;
    for (const auto& [exp, coeff] : terms_) out.terms_[exp] = coeff * scalar;
    return out;
}

bool MarkerPoly::is_integral() const {
    for (const auto& [exp, coeff] : terms_) {
        (void)exp;
        if (boost::multiprecision::denominator(coeff) != 1) return false;
    }
    return true;
}

BigRat MarkerPoly::coefficient(const MarkerExp& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigRat(0) : it->second;
}

BigRat MarkerPoly::value_at_ones() const {
    BigRat total = 0;
    for (const auto& [exp, coeff] : terms_) {
        (void)exp;
        total += coeff;
    }
    return total;
}

std::string MarkerPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Iterate in descending exponent order for a stable, readable form.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exp, coeff] = *it;
        if (!first) out << " + ";
        first = false;
        bool printed = false;
        if (coeff != 1 || (exp.a == 0 && exp.b == 0 && exp.t == 0)) {
            out << coeff;
            printed = true;
        }
        auto var = [&](const char* name, int power) {
            if (power == 0) return;
            if (printed) out << "*";
            out << name;
            if (power > 1) out << "^" << power;
            printed = true;
        };
        var("t", exp.t);
        var("a", exp.a);
        var("b", exp.b);
    }
    return out.str();
}

SeriesTable::SeriesTable(int max_n, int max_k) : max_n_(max_n), max_k_(max_k) {
    if (max_n < 0 || max_k < 0)
        throw std::invalid_argument("series truncation orders must be non-negative");
    coeff_.resize(static_cast<std::size_t>(max_n + 1) * (max_k + 1));
}

MarkerPoly& SeriesTable::at(int n, int k) {
    if (n < 0 || n > max_n_ || k < 0 || k > max_k_)
        throw std::invalid_argument("series coefficient index out of range");
    return coeff_[static_cast<std::size_t>(n) * (max_k_ + 1) + k];
}

const MarkerPoly& SeriesTable::at(int n, int k) const {
    return const_cast<SeriesTable*>(this)->at(n, k);
}

SeriesTable SeriesTable::operator+(const SeriesTable& other) const {
    if (max_n_ != other.max_n_ || max_k_ != other.max_k_)
        throw std::invalid_argument("series truncation orders differ");
    SeriesTable out(max_n_, max_k_);
    for (int n = 0; n <= max_n_; ++n)
        for (int k = 0; k <= max_k_; ++k) {
            out.at(n, k) = at(n, k);
            out.at(n, k) += other.at(n, k);
        }
    return out;
}

SeriesTable SeriesTable::operator*(const SeriesTable& other) const {
    if (max_n_ != other.max_n_ || max_k_ != other.max_k_)
        throw std::invalid_argument("series truncation orders differ");
    SeriesTable out(max_n_, max_k_);
    for (int n = 0; n <= max_n_; ++n)
        for (int k = 0; k <= max_k_; ++k) {
            if (at(n, k).is_zero()) continue;
            for (int i = 0; n + i <= max_n_; ++i)
                for (int j = 0; k + j <= max_k_; ++j) {
                    if (other.at(i, j).is_zero()) continue;
                    out.at(n + i, k + j) += at(n, k) * other.at(i, j);
                }
        }
    return out;
}

SeriesTable SeriesTable::reciprocal() const {
    if (!(at(0, 0) == MarkerPoly::constant(1)))
        throw std::invalid_argument("reciprocal requires constant term 1");
    SeriesTable out(max_n_, max_k_);
    for (int n = 0; n <= max_n_; ++n)
        for (int k = 0; k <= max_k_; ++k) {
            // r[n][k] = [n=k=0] - sum_{(i,j) != (0,0)} s[i][j] r[n-i][k-j]
            MarkerPoly acc;
            if (n == 0 && k == 0) acc += MarkerPoly::constant(1);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= k; ++j) {
                    if (i == 0 && j == 0) continue;
                    acc += at(i, j) * out.at(n - i, k - j) * BigRat(-1);
                }
            out.at(n, k) = std::move(acc);
        }
    return out;
}

MarkerPoly SeriesTable::entry(int n, int k) const {
    const BigRat scale(factorial(n) * factorial(k));
    MarkerPoly out = at(n, k) * scale;
    if (!out.is_integral())
        throw std::logic_error("normalized series entry has a fractional coefficient");
    return out;
}

BigInt SeriesTable::entry_at_ones(int n, int k) const {
    return to_integer(entry(n, k).value_at_ones(), "series entry at markers 1");
}

BigInt SeriesTable::refined_count(int n, int k, int top_rows, int empty_rows,
                                  int empty_cols) const {
    const MarkerExp exp{empty_rows, empty_cols, top_rows};
    return to_integer(entry(n, k).coefficient(exp), "refined series count");
}

SeriesTable egf_gamma_free(int max_n, int max_k) {
    SeriesTable exp_ax(max_n, max_k);  // e^{a x}
    for (int n = 0; n <= max_n; ++n)
        exp_ax.at(n, 0) =
            MarkerPoly::monomial(MarkerExp{n, 0, 0}, BigRat(BigInt(1), factorial(n)));

    SeriesTable exp_by(max_n, max_k);  // e^{b y}
    for (int k = 0; k <= max_k; ++k)
        exp_by.at(0, k) =
            MarkerPoly::monomial(MarkerExp{0, k, 0}, BigRat(BigInt(1), factorial(k)));

    // 1 - t (e^x - 1)(e^y - 1)
    SeriesTable denom(max_n, max_k);
    denom.at(0, 0) = MarkerPoly::constant(1);
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= max_k; ++k)
            denom.at(n, k) = MarkerPoly::monomial(
                MarkerExp{0, 0, 1}, BigRat(BigInt(-1), factorial(n) * factorial(k)));

    return exp_ax * exp_by * denom.reciprocal();
}

UniSeries::UniSeries(int max_deg) {
    if (max_deg < 0) throw std::invalid_argument("series degree must be non-negative");
    c_.resize(static_cast<std::size_t>(max_deg) + 1);
}

UniSeries UniSeries::operator*(const UniSeries& other) const {
    UniSeries out(std::max(max_deg(), other.max_deg()));
    for (int i = 0; i <= max_deg(); ++i) {
        if (at(i) == 0) continue;
        for (int j = 0; j <= other.max_deg() && i + j <= out.max_deg(); ++j)
            out.at(i + j) += at(i) * other.at(j);
    }
    return out;
}

UniSeries UniSeries::reciprocal() const {
    if (at(0) == 0) throw std::invalid_argument("reciprocal requires a nonzero constant term");
    UniSeries out(max_deg());
    out.at(0) = BigRat(1) / at(0);
    for (int n = 1; n <= max_deg(); ++n) {
        BigRat acc = 0;
        for (int i = 1; i <= n; ++i) acc += at(i) * out.at(n - i);
        out.at(n) = -acc / at(0);
    }
    return out;
}

UniSeries UniSeries::derivative() const {
    UniSeries out(std::max(0, max_deg() - 1));
    for (int n = 1; n <= max_deg(); ++n) out.at(n - 1) = at(n) * n;
    return out;
}

UniSeries UniSeries::integral() const {
    UniSeries out(max_deg() + 1);
    for (int n = 0; n <= max_deg(); ++n) out.at(n + 1) = at(n) / (n + 1);
    return out;
}

UniSeries UniSeries::log() const {
    if (at(0) != 1) throw std::invalid_argument("log requires constant term 1");
    // log(f) = integral of f'/f, which keeps every step exact.  The
    // result is truncated back to this series' degree: the top entry
    // of the antiderivative would need coefficients beyond it.
    const UniSeries full = (derivative() * reciprocal()).integral();
    UniSeries out(max_deg());
    for (int n = 0; n <= max_deg(); ++n) out.at(n) = full.at(n);
    return out;
}

BigInt UniSeries::integer_coefficient(int n) const {
    const BigInt fn = factorial(n);
    return to_integer(at(n) * BigRat(fn * fn), "normalized series coefficient");
}

UniSeries bessel_j0_series(int max_deg) {
    UniSeries out(max_deg);
    for (int n = 0; n <= max_deg; ++n) {
        const BigInt fn = factorial(n);
        out.at(n) = BigRat(BigInt(n % 2 == 0 ? 1 : -1), fn * fn);
    }
    return out;
}

UniSeries omega_series(int max_deg) { return bessel_j0_series(max_deg).reciprocal(); }

std::vector<BigInt> omega_numbers(int max_n) {
    const UniSeries series = omega_series(max_n);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out.push_back(series.integer_coefficient(n));
    return out;
}

UniSeries log_reciprocal_bessel_series(int max_deg) {
    // -log J0(2 sqrt x), computed exactly from the log of the series.
    const UniSeries lg = bessel_j0_series(max_deg).log();
    UniSeries out(max_deg);
    for (int n = 0; n <= max_deg; ++n) out.at(n) = -lg.at(n);
    return out;
}

std::vector<BigInt> bessel_tree_numbers(int max_n) {
    const UniSeries series = log_reciprocal_bessel_series(max_n + 1);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out.push_back(series.integer_coefficient(n + 1));
    return out;
}

}  // namespace gammafree
