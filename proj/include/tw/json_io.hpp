#pragma once

// JSON interchange for the domain types. Partitions are integer arrays,
// tableaux arrays of arrays, involutions {n, cycles}, diagrams
// {n, arcs, open, class}, sequences {kind, shapes}.

#include <json.hpp>

#include "tw/arc_diagram.hpp"
#include "tw/ferrers_sequence.hpp"
#include "tw/involution.hpp"
#include "tw/partition.hpp"
#include "tw/tableau.hpp"

namespace tw {

using json = nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline json to_json(const StandardYoungTableau& t) { return json(t.rows()); }

inline StandardYoungTableau syt_from_json(const json& j) {
    return StandardYoungTableau(j.get<std::vector<std::vector<int>>>());
}

inline json to_json(const Involution& inv) {
    json cycles = json::array();
    for (auto& [a, b] : inv.cycles()) cycles.push_back(json::array({a, b}));
    return json{{"n", inv.size()}, {"cycles", cycles}};
}

inline Involution involution_from_json(const json& j) {
    std::vector<std::pair<int, int>> cycles;
    for (auto& c : j.at("cycles")) cycles.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return Involution(j.at("n").get<int>(), std::move(cycles));
}

inline json to_json(const ArcDiagram& d) {
    json arcs = json::array();
    for (auto& [a, b] : d.arcs()) arcs.push_back(json::array({a, b}));
    return json{{"n", d.n()},
                {"arcs", arcs},
                {"open", d.open_lefts()},
                {"class", to_string(d.diagram_class())}};
}

inline ArcDiagram diagram_from_json(const json& j) {
    std::vector<std::pair<int, int>> arcs;
    for (auto& a : j.at("arcs")) arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    std::vector<int> open;
    if (j.contains("open")) open = j.at("open").get<std::vector<int>>();
    return ArcDiagram(j.at("n").get<int>(), std::move(arcs), std::move(open),
                      diagram_class_from_string(j.at("class").get<std::string>()));
}

inline json to_json(const FerrersSequence& s) {
    json shapes = json::array();
    for (auto& p : s.shapes) shapes.push_back(to_json(p));
    return json{{"kind", to_string(s.kind)}, {"shapes", shapes}};
}

inline FerrersSequence sequence_from_json(const json& j) {
    FerrersSequence s{tableau_kind_from_string(j.at("kind").get<std::string>()), {}};
    for (auto& p : j.at("shapes")) s.shapes.push_back(partition_from_json(p));
    return s;
}

}  // namespace tw
