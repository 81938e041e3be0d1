#include "gammafree/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gammafree {

BinaryMatrix::BinaryMatrix(int rows, int cols, std::vector<Pos> ones)
    : rows_(rows), cols_(cols), ones_(std::move(ones)) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be non-negative");
    std::sort(ones_.begin(), ones_.end());
    for (std::size_t i = 0; i < ones_.size(); ++i) {
        const Pos& p = ones_[i];
        if (p.row < 1 || p.row > rows_ || p.col < 1 || p.col > cols_)
            throw std::invalid_argument("matrix position out of bounds");
        if (i > 0 && ones_[i - 1] == p)
            throw std::invalid_argument("duplicate matrix position");
    }
}

bool BinaryMatrix::one_at(int row, int col) const {
    return std::binary_search(ones_.begin(), ones_.end(), Pos{row, col});
}

std::vector<int> BinaryMatrix::cols_of_row(int row) const {
    std::vector<int> out;
    for (const Pos& p : ones_)
        if (p.row == row) out.push_back(p.col);
    return out;  // ones_ is sorted, so columns come out ascending
}

std::vector<int> BinaryMatrix::rows_of_col(int col) const {
    std::vector<int> out;
    for (const Pos& p : ones_)
        if (p.col == col) out.push_back(p.row);
    return out;
}

bool BinaryMatrix::row_empty(int row) const { return cols_of_row(row).empty(); }
bool BinaryMatrix::col_empty(int col) const { return rows_of_col(col).empty(); }

int BinaryMatrix::empty_row_count() const {
    std::set<int> used;
    for (const Pos& p : ones_) used.insert(p.row);
    return rows_ - static_cast<int>(used.size());
}

int BinaryMatrix::empty_col_count() const {
    std::set<int> used;
    for (const Pos& p : ones_) used.insert(p.col);
    return cols_ - static_cast<int>(used.size());
}

int BinaryMatrix::top_row_count() const {
    std::set<int> rows;
    for (int c = 1; c <= cols_; ++c)
        if (auto r = highest_one_row(c)) rows.insert(*r);
    return static_cast<int>(rows.size());
}

std::optional<int> BinaryMatrix::highest_one_row(int col) const {
    std::optional<int> best;
    for (const Pos& p : ones_)
        if (p.col == col && (!best || p.row > *best)) best = p.row;
    return best;
}

std::optional<int> BinaryMatrix::leftmost_one_col(int row) const {
    const std::vector<int> cols = cols_of_row(row);
    if (cols.empty()) return std::nullopt;
    return cols.back();  // largest column index = leftmost
}

std::optional<int> BinaryMatrix::rightmost_one_col(int row) const {
    const std::vector<int> cols = cols_of_row(row);
    if (cols.empty()) return std::nullopt;
    return cols.front();  // smallest column index = rightmost
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    if (text.empty()) return lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
        if (start == text.size()) break;  // trailing newline ends the grid
    }
    return lines;
}

BinaryMatrix from_lines(const std::vector<std::string>& lines, int rows, int cols) {
    std::vector<Pos> ones;
    for (int i = 0; i < rows; ++i) {
        const std::string& line = lines[i];
        if (static_cast<int>(line.size()) != cols)
            throw std::invalid_argument("ragged matrix text");
        for (int j = 0; j < cols; ++j) {
            const char ch = line[j];
            if (ch == '1')
                ones.push_back(Pos{rows - i, cols - j});
            else if (ch != '0')
                throw std::invalid_argument("matrix text must contain only '0' and '1'");
        }
    }
    return BinaryMatrix(rows, cols, std::move(ones));
}

}  // namespace

BinaryMatrix BinaryMatrix::parse(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    const int rows = static_cast<int>(lines.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(lines[0].size());
    return from_lines(lines, rows, cols);
}

BinaryMatrix BinaryMatrix::parse(const std::string& text, int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be non-negative");
    const std::vector<std::string> lines = split_lines(text);
    if (static_cast<int>(lines.size()) != rows)
        throw std::invalid_argument("matrix text does not match the declared row count");
    return from_lines(lines, rows, cols);
}

std::string BinaryMatrix::render() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
    for (int r = rows_; r >= 1; --r) {
        for (int c = cols_; c >= 1; --c) out.push_back(one_at(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

}  // namespace gammafree
