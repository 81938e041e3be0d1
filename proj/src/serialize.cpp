#include "gammafree/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gammafree {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return parsed;
}

std::vector<int> int_vector(const json& value, const char* what) {
    if (!value.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const json& item : value) {
        if (!item.is_number_integer())
            throw std::invalid_argument(std::string(what) + " must contain integers");
        out.push_back(item.get<int>());
    }
    return out;
}

}  // namespace

std::string callan_to_json(const CallanSequence& seq) {
    json pairs = json::array();
    for (const SetPair& p : seq.pairs())
        pairs.push_back(json{{"S", p.rows}, {"T", p.cols}});
    return json{{"n", seq.n()}, {"k", seq.k()}, {"pairs", pairs}}.dump();
}

CallanSequence callan_from_json(const std::string& text, std::optional<int> n,
                                std::optional<int> k) {
    const json parsed = parse_json(text);
    json pairs;
    if (parsed.is_array()) {
        pairs = parsed;
    } else if (parsed.is_object()) {
        if (!parsed.contains("pairs"))
            throw std::invalid_argument("callan JSON object lacks \"pairs\"");
        pairs = parsed["pairs"];
        if (!n && parsed.contains("n")) n = parsed["n"].get<int>();
        if (!k && parsed.contains("k")) k = parsed["k"].get<int>();
    } else {
        throw std::invalid_argument("callan JSON must be an object or an array");
    }
    if (!n || !k)
        throw std::invalid_argument("callan bounds missing: pass n and k");
    if (!pairs.is_array()) throw std::invalid_argument("\"pairs\" must be an array");
    std::vector<SetPair> out;
    for (const json& p : pairs) {
        if (!p.is_object() || !p.contains("S") || !p.contains("T"))
            throw std::invalid_argument("callan pair must carry \"S\" and \"T\"");
        out.push_back(SetPair{int_vector(p["S"], "pair row set"),
                              int_vector(p["T"], "pair column set")});
    }
    return CallanSequence(*n, *k, std::move(out));
}

namespace {

template <typename Label, typename Less, typename ToJson>
json forest_node_json(const Forest<Label, Less>& forest, const Label& v,
                      const ToJson& label_json) {
    json children = json::array();
    for (const Label& c : forest.children(v))
        children.push_back(forest_node_json(forest, c, label_json));
    return json{{"label", label_json(v)}, {"children", children}};
}

template <typename Label, typename Less, typename ToJson>
std::string forest_json(const Forest<Label, Less>& forest, const ToJson& label_json) {
    json roots = json::array();
    for (const Label& r : forest.roots())
        roots.push_back(forest_node_json(forest, r, label_json));
    return roots.dump();
}

template <typename Label, typename FromJson>
void collect_forest(const json& node, const std::optional<Label>& parent,
                    std::vector<Label>& verts,
                    std::vector<std::pair<Label, Label>>& edges,
                    const FromJson& label_of) {
    if (!node.is_object() || !node.contains("label"))
        throw std::invalid_argument("forest node must carry \"label\"");
    const Label v = label_of(node["label"]);
    verts.push_back(v);
    if (parent) edges.emplace_back(*parent, v);
    if (node.contains("children")) {
        if (!node["children"].is_array())
            throw std::invalid_argument("forest \"children\" must be an array");
        for (const json& c : node["children"])
            collect_forest(c, std::optional<Label>(v), verts, edges, label_of);
    }
}

template <typename Label, typename Less, typename FromJson>
Forest<Label, Less> forest_from(const std::string& text, const FromJson& label_of) {
    const json parsed = parse_json(text);
    if (!parsed.is_array())
        throw std::invalid_argument("forest JSON must be an array of roots");
    std::vector<Label> verts;
    std::vector<std::pair<Label, Label>> edges;
    for (const json& root : parsed)
        collect_forest(root, std::optional<Label>(), verts, edges, label_of);
    return Forest<Label, Less>::from_edges(verts, edges);
}

}  // namespace

std::string forest_to_json(const Forest<int>& forest) {
    return forest_json(forest, [](int v) { return json(v); });
}

Forest<int> forest_from_json(const std::string& text) {
    return forest_from<int, std::less<int>>(text, [](const json& v) {
        if (!v.is_number_integer())
            throw std::invalid_argument("forest label must be an integer");
        return v.get<int>();
    });
}

std::string point_forest_to_json(const PointForest& forest) {
    return forest_json(forest, [](const Point& p) { return json::array({p.x, p.y}); });
}

PointForest point_forest_from_json(const std::string& text) {
    return forest_from<Point, PointFirstLess>(text, [](const json& v) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
            !v[1].is_number_integer())
            throw std::invalid_argument("point label must be a [x,y] pair");
        return Point{v[0].get<int>(), v[1].get<int>()};
    });
}

std::vector<int> parse_int_line(const std::string& line) {
    std::istringstream in(line);
    std::vector<int> out;
    int value = 0;
    while (in >> value) out.push_back(value);
    if (!in.eof()) throw std::invalid_argument("expected whitespace-separated integers");
    return out;
}

std::string int_line(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << " ";
        out << values[i];
    }
    return out.str();
}

PermPair perm_pair_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string first, second, rest;
    if (!std::getline(in, first))
        throw std::invalid_argument("permutation pair needs two integer lines");
    if (!std::getline(in, second))
        throw std::invalid_argument("permutation pair needs a second integer line");
    while (std::getline(in, rest))
        if (rest.find_first_not_of(" \t\r") != std::string::npos)
            throw std::invalid_argument("unexpected content after the permutation pair");
    return PermPair(parse_int_line(first), parse_int_line(second));
}

std::string perm_pair_to_text(const PermPair& pair) {
    return int_line(pair.alpha()) + "\n" + int_line(pair.beta()) + "\n";
}

}  // namespace gammafree
