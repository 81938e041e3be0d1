#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gammafree/counting.hpp"

namespace gammafree {

// Exponents of one monomial in the markers a, b, t.
struct MarkerExp {
    int a = 0;
    int b = 0;
    int t = 0;
    auto operator<=>(const MarkerExp&) const = default;
};

// Polynomial in the markers with exact rational coefficients.
class MarkerPoly {
public:
    MarkerPoly() = default;
    static MarkerPoly constant(const BigRat& value);
    static MarkerPoly monomial(const MarkerExp& exp, const BigRat& coeff);

    MarkerPoly& operator+=(const MarkerPoly& other);
    MarkerPoly operator*(const MarkerPoly& other) const;
    MarkerPoly operator*(const BigRat& scalar) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;  // every coefficient has denominator 1
    BigRat coefficient(const MarkerExp& exp) const;
    BigRat value_at_ones() const;  // evaluation at a = b = t = 1
    const std::map<MarkerExp, BigRat>& terms() const { return terms_; }

    std::string to_string() const;  // "2*t^2*a + t" style, descending exponents

    bool operator==(const MarkerPoly&) const = default;

private:
    std::map<MarkerExp, BigRat> terms_;  // nonzero coefficients only
};

// Truncated power series in x (marking rows) and y (marking columns)
// whose coefficients are marker polynomials.  Closed under addition,
// multiplication and reciprocal of a series with constant term 1, all
// truncated to x^max_n y^max_k.
class SeriesTable {
public:
    SeriesTable(int max_n, int max_k);  // zero series

    int max_n() const { return max_n_; }
    int max_k() const { return max_k_; }

    MarkerPoly& at(int n, int k);
    const MarkerPoly& at(int n, int k) const;

    SeriesTable operator+(const SeriesTable& other) const;
    SeriesTable operator*(const SeriesTable& other) const;
    SeriesTable reciprocal() const;  // requires constant term 1

    // n! k! times the Taylor coefficient of x^n y^k; all marker
    // coefficients must come out integral.
    MarkerPoly entry(int n, int k) const;
    BigInt entry_at_ones(int n, int k) const;
    BigInt refined_count(int n, int k, int top_rows, int empty_rows,
                         int empty_cols) const;

private:
    int max_n_;
    int max_k_;
    std::vector<MarkerPoly> coeff_;  // (max_n+1) x (max_k+1), row-major
};

// e^{a x} e^{b y} / (1 - t (e^x - 1)(e^y - 1)) truncated to
// x^max_n y^max_k.  entry(n, k) counts the Gamma-free n x k matrices,
// refined by number of top rows (t), all-zero rows (a) and all-zero
// columns (b); at a = b = t = 1 it equals poly_bernoulli(n, k).
SeriesTable egf_gamma_free(int max_n, int max_k);

// Truncated univariate power series with exact rational coefficients.
class UniSeries {
public:
    explicit UniSeries(int max_deg);  // zero series

    int max_deg() const { return static_cast<int>(c_.size()) - 1; }
    BigRat& at(int n) { return c_.at(static_cast<std::size_t>(n)); }
    const BigRat& at(int n) const { return c_.at(static_cast<std::size_t>(n)); }

    UniSeries operator*(const UniSeries& other) const;
    UniSeries reciprocal() const;      // requires nonzero constant term
    UniSeries derivative() const;
    UniSeries integral() const;        // antiderivative with constant 0
    UniSeries log() const;             // requires constant term 1

    // n!^2 times the coefficient of x^n, which must be an integer.
    BigInt integer_coefficient(int n) const;

private:
    std::vector<BigRat> c_;
};

// sum_n (-1)^n x^n / n!^2, the Bessel function J0 evaluated at 2*sqrt(x).
UniSeries bessel_j0_series(int max_deg);

// Reciprocal of bessel_j0_series; n!^2 [x^n] counts the pairs of
// permutations of {1..n} with no common rise, equivalently the
// complete non-ambiguous forests with n leaves.
UniSeries omega_series(int max_deg);
std::vector<BigInt> omega_numbers(int max_n);  // omega(0..max_n)

// -log of bessel_j0_series; (n+1)!^2 [x^{n+1}] counts the complete
// non-ambiguous trees with n internal vertices.
UniSeries log_reciprocal_bessel_series(int max_deg);
std::vector<BigInt> bessel_tree_numbers(int max_n);  // b_0..b_max_n

}  // namespace gammafree
