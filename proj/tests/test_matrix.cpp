#include <stdexcept>

#include "doctest.h"
#include "gammafree/matrix.hpp"

using gammafree::BinaryMatrix;
using gammafree::Pos;

TEST_CASE("matrix text round-trips through parse and render") {
    const std::string text = "0110\n1100\n0101\n";
    const BinaryMatrix m = BinaryMatrix::parse(text);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 4);
    CHECK(m.render() == text);
    CHECK(BinaryMatrix::parse(m.render()) == m);
}

TEST_CASE("rows count from the bottom and columns from the right") {
    // Top text line is the highest row; the last character of a line
    // is column 1.
    const BinaryMatrix m = BinaryMatrix::parse("01\n10\n");
    CHECK(m.one_at(2, 1));
    CHECK(m.one_at(1, 2));
    CHECK_FALSE(m.one_at(1, 1));
    CHECK_FALSE(m.one_at(2, 2));

    const BinaryMatrix corner = BinaryMatrix::parse("00\n01\n");
    CHECK(corner.ones() == std::vector<Pos>{{1, 1}});
}

TEST_CASE("leftmost means the largest column index") {
    const BinaryMatrix m = BinaryMatrix::parse("110\n");
    CHECK(m.leftmost_one_col(1) == 3);
    CHECK(m.rightmost_one_col(1) == 2);
    CHECK_FALSE(m.leftmost_one_col(1) == m.rightmost_one_col(1));
}

TEST_CASE("per-line accessors") {
    const BinaryMatrix m = BinaryMatrix::parse("0100\n0110\n1011\n");
    CHECK(m.cols_of_row(1) == std::vector<int>{1, 2, 4});
    CHECK(m.rows_of_col(2) == std::vector<int>{1, 2});
    CHECK(m.rows_of_col(3) == std::vector<int>{2, 3});
    CHECK(m.highest_one_row(3) == 3);
    CHECK(m.highest_one_row(4) == 1);
    CHECK(m.row_empty(1) == false);
    CHECK(m.one_count() == 6);
}

TEST_CASE("empty-line statistics") {
    const BinaryMatrix m = BinaryMatrix::parse("000\n010\n000\n");
    CHECK(m.empty_row_count() == 2);
    CHECK(m.empty_col_count() == 2);
    CHECK(m.top_row_count() == 1);
    CHECK(m.row_empty(1));
    CHECK_FALSE(m.row_empty(2));
    CHECK(m.col_empty(1));
    CHECK_FALSE(m.highest_one_row(1).has_value());
    CHECK_FALSE(m.leftmost_one_col(3).has_value());
}

TEST_CASE("zero-dimension shapes need explicit bounds") {
    const BinaryMatrix none = BinaryMatrix::parse("", 0, 0);
    CHECK(none.rows() == 0);
    CHECK(none.cols() == 0);
    CHECK(none.render() == "");

    const BinaryMatrix wide = BinaryMatrix::parse("", 0, 5);
    CHECK(wide.cols() == 5);

    const BinaryMatrix tall = BinaryMatrix::parse("\n\n", 2, 0);
    CHECK(tall.rows() == 2);
    CHECK(tall.render() == "\n\n");
    CHECK(BinaryMatrix::parse(tall.render(), 2, 0) == tall);

    const BinaryMatrix sized = BinaryMatrix::parse("01\n10\n", 2, 2);
    CHECK(sized == BinaryMatrix::parse("01\n10\n"));
}

TEST_CASE("construction rejects malformed input") {
    CHECK_THROWS_AS(BinaryMatrix::parse("01\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix::parse("02\n"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix::parse("01\n", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(1, 1, {Pos{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(1, 1, {Pos{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(2, 2, {Pos{1, 1}, Pos{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(-1, 2, {}), std::invalid_argument);
}

TEST_CASE("ones are stored sorted regardless of construction order") {
    const BinaryMatrix m(2, 2, {Pos{2, 1}, Pos{1, 2}, Pos{1, 1}});
    CHECK(m.ones() == std::vector<Pos>{{1, 1}, {1, 2}, {2, 1}});
}
