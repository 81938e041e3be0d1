#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gammafree/counting.hpp"
#include "gammafree/enumerate.hpp"
#include "gammafree/matrix.hpp"
#include "gammafree/series.hpp"

using namespace gammafree;

TEST_CASE("marker polynomial arithmetic and rendering") {
    CHECK(MarkerPoly().to_string() == "0");
    CHECK(MarkerPoly::constant(1).to_string() == "1");

    MarkerPoly p = MarkerPoly::monomial(MarkerExp{1, 0, 2}, 2);
    p += MarkerPoly::monomial(MarkerExp{0, 0, 1}, 1);
    CHECK(p.to_string() == "2*t^2*a + t");
    CHECK(p.value_at_ones() == 3);
    CHECK(p.coefficient(MarkerExp{1, 0, 2}) == 2);
    CHECK(p.coefficient(MarkerExp{0, 1, 0}) == 0);
    CHECK(p.is_integral());
    CHECK_FALSE((p * BigRat(1, 2)).is_integral());

    MarkerPoly t = MarkerPoly::monomial(MarkerExp{0, 0, 1}, 1);
    t += MarkerPoly::constant(1);
    MarkerPoly a = MarkerPoly::monomial(MarkerExp{1, 0, 0}, 1);
    a += MarkerPoly::constant(1);
    const MarkerPoly prod = t * a;
    CHECK(prod.coefficient(MarkerExp{1, 0, 1}) == 1);
    CHECK(prod.coefficient(MarkerExp{1, 0, 0}) == 1);
    CHECK(prod.coefficient(MarkerExp{0, 0, 1}) == 1);
    CHECK(prod.coefficient(MarkerExp{}) == 1);
    CHECK(prod.value_at_ones() == 4);

    // Cancellation removes the term entirely.
    MarkerPoly z = MarkerPoly::monomial(MarkerExp{0, 0, 1}, 1);
    z += MarkerPoly::monomial(MarkerExp{0, 0, 1}, -1);
    CHECK(z.is_zero());
}

TEST_CASE("series entries at markers one equal the closed-form counts") {
    const SeriesTable table = egf_gamma_free(4, 4);
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k)
            CHECK(table.entry_at_ones(n, k) == poly_bernoulli(n, k));
}

TEST_CASE("refined series entries match enumeration statistics") {
    const SeriesTable table = egf_gamma_free(3, 3);
    for (int n = 0; n <= 3; ++n) {
        for (int k = 0; k <= 3; ++k) {
            MarkerPoly histogram;
            for (const BinaryMatrix& m : enumerate_gamma_free(n, k, EnumMode::naive))
                histogram += MarkerPoly::monomial(
                    MarkerExp{m.empty_row_count(), m.empty_col_count(),
                              m.top_row_count()},
                    1);
            CHECK(histogram == table.entry(n, k));
        }
    }
}

TEST_CASE("refined counts, pinned values") {
    const SeriesTable table = egf_gamma_free(2, 2);
    CHECK(table.refined_count(2, 2, 0, 2, 2) == 1);  // the all-zero matrix
    CHECK(table.refined_count(2, 2, 1, 1, 1) == 4);  // a single 1
    BigInt total = 0;
    for (int top = 0; top <= 2; ++top)
        for (int er = 0; er <= 2; ++er)
            for (int ec = 0; ec <= 2; ++ec)
                total += table.refined_count(2, 2, top, er, ec);
    CHECK(total == 14);
}

TEST_CASE("summing out markers recovers the no-empty-line counts") {
    const SeriesTable table = egf_gamma_free(4, 4);
    for (int n = 0; n <= 4; ++n) {
        for (int k = 0; k <= 4; ++k) {
            BigInt total = 0;
            for (int top = 0; top <= std::min(n, k); ++top)
                total += table.refined_count(n, k, top, 0, 0);
            CHECK(total == count_naf(n, k));
        }
    }
}

TEST_CASE("univariate series identities") {
    const UniSeries j0 = bessel_j0_series(8);
    const UniSeries omega = omega_series(8);
    const UniSeries prod = j0 * omega;
    CHECK(prod.at(0) == 1);
    for (int n = 1; n <= 8; ++n) CHECK(prod.at(n) == 0);

    // log(1/f) == -log(f), coefficient by coefficient.
    const UniSeries lhs = omega.log();
    const UniSeries rhs = log_reciprocal_bessel_series(8);
    for (int n = 0; n <= 8; ++n) CHECK(lhs.at(n) == rhs.at(n));

    // The derivative of the antiderivative gives the series back.
    const UniSeries back = j0.integral().derivative();
    for (int n = 0; n <= 8; ++n) CHECK(back.at(n) == j0.at(n));
}

TEST_CASE("permutation-pair counts from the reciprocal series") {
    const std::vector<BigInt> expected{1, 1, 3, 19, 211, 3651};
    CHECK(omega_numbers(5) == expected);
}

TEST_CASE("tree counts from the logarithmic series") {
    const std::vector<BigInt> expected{1, 1, 4, 33, 456, 9460};
    CHECK(bessel_tree_numbers(5) == expected);
    for (const BigInt& value : bessel_tree_numbers(8)) CHECK(value > 0);
}

TEST_CASE("normalization rejects fractional results") {
    UniSeries s(1);
    s.at(0) = 1;
    s.at(1) = BigRat(1, 3);
    CHECK(s.integer_coefficient(0) == 1);
    CHECK_THROWS_AS(s.integer_coefficient(1), std::logic_error);

    SeriesTable table(1, 0);
    table.at(0, 0) = MarkerPoly::constant(1);
    table.at(1, 0) = MarkerPoly::constant(BigRat(1, 3));
    CHECK_THROWS_AS(table.entry(1, 0), std::logic_error);
}

TEST_CASE("series guards") {
    UniSeries zero(3);
    CHECK_THROWS_AS(zero.reciprocal(), std::invalid_argument);
    UniSeries two(2);
    two.at(0) = 2;
    CHECK_THROWS_AS(two.log(), std::invalid_argument);
    SeriesTable t(2, 2);
    CHECK_THROWS_AS(t.reciprocal(), std::invalid_argument);
    CHECK_THROWS_AS(t.at(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(SeriesTable(-1, 2), std::invalid_argument);
}
