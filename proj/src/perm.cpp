#include "gammafree/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammafree {

bool is_permutation(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

PermPair::PermPair(std::vector<int> alpha, std::vector<int> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.size() != beta_.size())
        throw std::invalid_argument("permutation pair components differ in length");
    if (!is_permutation(alpha_) || !is_permutation(beta_))
        throw std::invalid_argument("permutation pair component is not a permutation");
}

std::vector<Point> points_of(const PermPair& pair) {
    std::vector<Point> out;
    out.reserve(pair.size());
    for (std::size_t i = 0; i < pair.size(); ++i)
        out.push_back(Point{pair.alpha()[i], pair.beta()[i]});
    return out;
}

PermPair pair_of_points(const std::vector<Point>& points) {
    std::vector<int> alpha, beta;
    alpha.reserve(points.size());
    beta.reserve(points.size());
    for (const Point& p : points) {
        alpha.push_back(p.x);
        beta.push_back(p.y);
    }
    return PermPair(std::move(alpha), std::move(beta));
}

std::vector<int> eta_from_points(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    std::vector<int> eta;
    eta.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].x != static_cast<int>(i) + 1)
            throw std::invalid_argument("point set first coordinates are not 1..n");
        eta.push_back(points[i].y);
    }
    if (!is_permutation(eta))
        throw std::invalid_argument("point set second coordinates are not a permutation");
    return eta;
}

std::vector<Point> points_of_eta(const std::vector<int>& eta) {
    if (!is_permutation(eta))
        throw std::invalid_argument("eta must be a permutation");
    std::vector<Point> out;
    out.reserve(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i)
        out.push_back(Point{static_cast<int>(i) + 1, eta[i]});
    return out;
}

}  // namespace gammafree
