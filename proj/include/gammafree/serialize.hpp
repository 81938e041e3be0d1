#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammafree/callan.hpp"
#include "gammafree/forest.hpp"
#include "gammafree/perm.hpp"
#include "gammafree/psi.hpp"

namespace gammafree {

// Callan sequences travel as {"n":..,"k":..,"pairs":[{"S":[..],"T":[..]},..]}.
// Explicit bounds override the ones found in the text (and are required
// when the text carries none, e.g. a bare pair array).
std::string callan_to_json(const CallanSequence& seq);
CallanSequence callan_from_json(const std::string& text,
                                std::optional<int> n = std::nullopt,
                                std::optional<int> k = std::nullopt);

// Forests travel as arrays of {"label":..,"children":[..]} root
// objects in canonical (decreasing) order; point labels are [x,y].
std::string forest_to_json(const Forest<int>& forest);
Forest<int> forest_from_json(const std::string& text);
std::string point_forest_to_json(const PointForest& forest);
PointForest point_forest_from_json(const std::string& text);

// Whitespace-separated integers; a permutation pair is two such lines.
std::vector<int> parse_int_line(const std::string& line);
std::string int_line(const std::vector<int>& values);
PermPair perm_pair_from_text(const std::string& text);
std::string perm_pair_to_text(const PermPair& pair);

}  // namespace gammafree
