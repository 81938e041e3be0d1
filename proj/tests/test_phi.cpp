#include <map>
#include <set>

#include "doctest.h"
#include "gammafree/enumerate.hpp"
#include "gammafree/gamma.hpp"
#include "gammafree/phi.hpp"

using namespace gammafree;

TEST_CASE("worked example: all rows are top rows") {
    const CallanSequence seq = phi(BinaryMatrix::parse("0100\n0110\n1011\n"));
    CHECK(seq.n() == 3);
    CHECK(seq.k() == 4);
    REQUIRE(seq.size() == 3);
    CHECK(seq.pairs()[0] == SetPair{{1}, {1, 4}});
    CHECK(seq.pairs()[1] == SetPair{{2}, {2}});
    CHECK(seq.pairs()[2] == SetPair{{3}, {3}});
}

TEST_CASE("worked examples: a special row joins its path's pair") {
    const CallanSequence column = phi(BinaryMatrix::parse("01\n01\n"));
    REQUIRE(column.size() == 1);
    CHECK(column.pairs()[0] == SetPair{{1, 2}, {1}});

    const CallanSequence corner = phi(BinaryMatrix::parse("11\n01\n"));
    REQUIRE(corner.size() == 1);
    CHECK(corner.pairs()[0] == SetPair{{1, 2}, {1, 2}});

    const CallanSequence mixed = phi(BinaryMatrix::parse("10\n01\n11\n"));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed.pairs()[0] == SetPair{{1, 3}, {2}});
    CHECK(mixed.pairs()[1] == SetPair{{2}, {1}});
}

TEST_CASE("empty rows and columns survive the round-trip") {
    const BinaryMatrix m = BinaryMatrix::parse("000\n010\n000\n");
    const CallanSequence seq = phi(m);
    CHECK(seq.size() == 1);
    CHECK(phi_inverse(seq) == m);
}

TEST_CASE("the empty sequence reconstructs the all-zero matrix") {
    const BinaryMatrix m = phi_inverse(CallanSequence(2, 3, {}));
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.one_count() == 0);
    CHECK(m.render() == "000\n000\n");

    const BinaryMatrix none = phi_inverse(CallanSequence(0, 0, {}));
    CHECK(none == BinaryMatrix::parse("", 0, 0));
    CHECK(phi(none).empty());
}

TEST_CASE("maps are mutually inverse over whole size classes") {
    for (const auto& [n, k] : {std::pair{3, 3}, std::pair{2, 4}, std::pair{4, 2},
                               std::pair{1, 5}, std::pair{4, 1}, std::pair{0, 3}}) {
        std::set<std::string> images;
        std::size_t count = 0;
        for_each_gamma_free(n, k, EnumMode::naive, [&](const BinaryMatrix& m) {
            ++count;
            const CallanSequence seq = phi(m);
            CHECK(phi_inverse(seq) == m);
            std::string key;
            for (const SetPair& p : seq.pairs()) {
                for (int v : p.rows) key += static_cast<char>('0' + v);
                key += '|';
                for (int v : p.cols) key += static_cast<char>('0' + v);
                key += ';';
            }
            images.insert(key);
        });
        CHECK(images.size() == count);

        for (const CallanSequence& seq : enumerate_callan(n, k))
            CHECK(phi(phi_inverse(seq)) == seq);
    }
}

TEST_CASE("reconstruction does not depend on the processing order") {
    for (const CallanSequence& seq : enumerate_callan(3, 3))
        CHECK(phi_inverse(seq, FillOrder::post_order) ==
              phi_inverse(seq, FillOrder::deepest_first));
}

TEST_CASE("reconstruction places the 1's of every column top-to-bottom") {
    for (const CallanSequence& seq : enumerate_callan(3, 3)) {
        for (const FillOrder order : {FillOrder::post_order, FillOrder::deepest_first}) {
            const PhiInverseTrace trace = phi_inverse_traced(seq, order);
            std::map<int, int> last_row;  // column -> row of its latest placement
            for (const Pos& p : trace.placements) {
                auto it = last_row.find(p.col);
                if (it != last_row.end()) CHECK(p.row < it->second);
                last_row[p.col] = p.row;
            }
            CHECK(trace.placements.size() == trace.matrix.one_count());
        }
    }
}

TEST_CASE("image shape and pair count match the matrix statistics") {
    for_each_gamma_free(3, 2, EnumMode::naive, [](const BinaryMatrix& m) {
        const CallanSequence seq = phi(m);
        CHECK(seq.n() == m.rows());
        CHECK(seq.k() == m.cols());
        // One pair per path; paths end in distinct top rows.
        CHECK(seq.size() == static_cast<std::size_t>(m.top_row_count()));
        int rows_used = 0, cols_used = 0;
        for (const SetPair& p : seq.pairs()) {
            rows_used += static_cast<int>(p.rows.size());
            cols_used += static_cast<int>(p.cols.size());
        }
        CHECK(rows_used == m.rows() - m.empty_row_count());
        CHECK(cols_used == m.cols() - m.empty_col_count());
    });
}

TEST_CASE("each pair's column set marks the top-1's of its highest row") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (const BinaryMatrix& m :
                 enumerate_gamma_free(n, k, EnumMode::pruned)) {
                std::set<Pos> expected;
                for (const Pos& p : top_ones(m)) expected.insert(p);
                std::set<Pos> from_pairs;
                const CallanSequence seq = phi(m);
                for (const SetPair& p : seq.pairs()) {
                    REQUIRE(!p.rows.empty());
                    const int top_row = p.rows.back();
                    for (int c : p.cols) from_pairs.insert(Pos{top_row, c});
                }
                CHECK(from_pairs == expected);
            }
        }
    }
}
