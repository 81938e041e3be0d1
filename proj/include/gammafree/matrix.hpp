#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gammafree {

// Position of an entry in a 0-1 matrix.  Rows are indexed 1..n from the
// bottom and columns 1..k from the right, so (1,1) is the bottom-right
// corner.  Under this convention "leftmost" means the largest column
// index and "highest" means the largest row index.
struct Pos {
    int row = 0;
    int col = 0;
    auto operator<=>(const Pos&) const = default;
};

// Immutable 0-1 matrix stored as the sorted list of its 1-positions.
// Construction validates bounds and rejects duplicates; all accessors
// are const, so instances can be shared freely across threads.
class BinaryMatrix {
public:
    BinaryMatrix() = default;  // the 0x0 matrix
    BinaryMatrix(int rows, int cols, std::vector<Pos> ones);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Pos>& ones() const { return ones_; }
    std::size_t one_count() const { return ones_.size(); }

    bool one_at(int row, int col) const;
    std::vector<int> cols_of_row(int row) const;  // ascending
    std::vector<int> rows_of_col(int col) const;  // ascending

    bool row_empty(int row) const;
    bool col_empty(int col) const;
    int empty_row_count() const;  // number of all-zero rows
    int empty_col_count() const;  // number of all-zero columns
    int top_row_count() const;    // rows containing the highest 1 of some column

    // Highest 1 of a column, leftmost/rightmost 1 of a row (if any).
    // Columns count from the right, hence leftmost = max column index.
    std::optional<int> highest_one_row(int col) const;
    std::optional<int> leftmost_one_col(int row) const;
    std::optional<int> rightmost_one_col(int row) const;

    // Text form: one '0'/'1' line per row, top row (largest index)
    // first, every line newline-terminated; the 0-row matrix renders
    // as the empty string.  parse(text) infers the dimensions; the
    // overload with explicit dimensions also covers shapes with zero
    // rows or zero columns, which the text alone cannot express.
    static BinaryMatrix parse(const std::string& text);
    static BinaryMatrix parse(const std::string& text, int rows, int cols);
    std::string render() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Pos> ones_;  // sorted by (row, col)
};

}  // namespace gammafree
