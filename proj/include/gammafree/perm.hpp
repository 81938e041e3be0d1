#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace gammafree {

// True when values is a permutation of {1..values.size()}.
bool is_permutation(const std::vector<int>& values);

// Grid point (x, y): x is a row label, y a column label.
struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

// Key order comparing points by first coordinate only; used for the
// increasing-forest structure on point sets with distinct x values.
struct PointFirstLess {
    bool operator()(const Point& a, const Point& b) const { return a.x < b.x; }
};

// A pair of equal-length permutations of {1..n}, read column-wise as
// the point sequence ((alpha_1,beta_1),...,(alpha_n,beta_n)).
class PermPair {
public:
    PermPair() = default;
    PermPair(std::vector<int> alpha, std::vector<int> beta);

    const std::vector<int>& alpha() const { return alpha_; }
    const std::vector<int>& beta() const { return beta_; }
    std::size_t size() const { return alpha_.size(); }

    bool operator==(const PermPair&) const = default;

private:
    std::vector<int> alpha_;
    std::vector<int> beta_;
};

std::vector<Point> points_of(const PermPair&);
PermPair pair_of_points(const std::vector<Point>&);

// The permutation eta with point set {(i, eta_i)}: sorts the points by
// x and reads off the y coordinates.
std::vector<int> eta_from_points(std::vector<Point> points);
std::vector<Point> points_of_eta(const std::vector<int>& eta);

}  // namespace gammafree
