#include "gammafree/counting.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace gammafree {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

namespace {

std::mutex stirling_mutex;
std::vector<std::vector<BigInt>> stirling_rows{{BigInt(1)}};  // row n holds S(n, 0..n)

}  // namespace

BigInt stirling2(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("stirling2 arguments must be non-negative");
    if (m > n) return 0;
    std::lock_guard<std::mutex> lock(stirling_mutex);
    while (static_cast<int>(stirling_rows.size()) <= n) {
        const std::vector<BigInt>& prev = stirling_rows.back();
        const int row = static_cast<int>(stirling_rows.size());
        std::vector<BigInt> next(static_cast<std::size_t>(row) + 1);
        next[0] = 0;
        next[row] = 1;
        for (int j = 1; j < row; ++j) next[j] = j * prev[j] + prev[j - 1];
        stirling_rows.push_back(std::move(next));
    }
    return stirling_rows[n][m];
}

BigInt poly_bernoulli(int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("poly_bernoulli arguments must be non-negative");
    BigInt total = 0;
    for (int m = 0; m <= std::min(n, k); ++m) {
        const BigInt fm = factorial(m);
        total += fm * stirling2(n + 1, m + 1) * fm * stirling2(k + 1, m + 1);
    }
    return total;
}

BigInt count_naf(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("count_naf arguments must be non-negative");
    BigInt total = 0;
    for (int m = 0; m <= std::min(n, k); ++m) {
        const BigInt fm = factorial(m);
        total += fm * fm * stirling2(n, m) * stirling2(k, m);
    }
    return total;
}

}  // namespace gammafree
