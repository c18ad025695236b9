#pragma once

// Serializable problem instances: a graph (optionally with a pinned
// combinatorial embedding), optional demand edges/weights, and optionally an
// explicit list of cycles for instances that carry a hand-built family.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../../vendor/json.hpp"
#include "cyclepack/embedding.hpp"
#include "cyclepack/family.hpp"
#include "cyclepack/rational.hpp"

namespace cyclepack {

struct Instance {
  std::string name;
  int n = 0;
  bool directed = false;
  std::vector<std::pair<int, int>> edges;

  // Optional pinned embedding: per-vertex dart lists in counterclockwise
  // order (dart 2e leaves edges[e].first) and the index of the face orbit to
  // place at infinity.
  std::optional<std::vector<std::vector<int>>> rotation;
  std::optional<int> infinite_face;

  std::vector<int> demand_edges;
  std::vector<Rat> demand_weights;

  // Explicit cycle list (edge-id sets) for instances whose family is given by
  // construction rather than by a named rule.
  std::vector<std::vector<int>> cycles;

  EmbeddedGraph graph() const {
    std::vector<EdgeRec> ee;
    ee.reserve(edges.size());
    for (auto [u, v] : edges) ee.push_back({u, v});
    return build_embedding(n, std::move(ee), directed, rotation,
                           infinite_face ? std::optional<int>(*infinite_face) : std::nullopt);
  }

  FamilySpec family(const EmbeddedGraph& g, FamilyKind kind) const {
    if (!family_uses_demands(kind)) return make_family(g, kind);
    if (kind != FamilyKind::ExactlyOneD) return make_family(g, kind, demand_edges);
    return make_family(g, kind, demand_edges, demand_weights);
  }
};

inline nlohmann::json instance_to_json(const Instance& ins) {
  nlohmann::json j;
  j["name"] = ins.name;
  j["vertices"] = ins.n;
  j["directed"] = ins.directed;
  auto& je = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : ins.edges) je.push_back({u, v});
  if (ins.rotation) j["rotation"] = *ins.rotation;
  if (ins.infinite_face) j["infinite_face"] = *ins.infinite_face;
  if (!ins.demand_edges.empty()) j["demand_edges"] = ins.demand_edges;
  if (!ins.demand_weights.empty()) {
    auto& jw = j["demand_weights"] = nlohmann::json::array();
    for (const Rat& w : ins.demand_weights) jw.push_back(rat_str(w));
  }
  if (!ins.cycles.empty()) j["cycles"] = ins.cycles;
  return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorKind::BadInstance, "instance document must be a JSON object");
  Instance ins;
  ins.name = j.value("name", std::string("unnamed"));
  require(j.contains("vertices") && j["vertices"].is_number_integer(), ErrorKind::BadInstance,
          "instance needs an integer 'vertices' field");
  ins.n = j["vertices"].get<int>();
  ins.directed = j.value("directed", false);
  require(j.contains("edges") && j["edges"].is_array(), ErrorKind::BadInstance,
          "instance needs an 'edges' array");
  for (const auto& e : j["edges"]) {
    require(e.is_array() && e.size() == 2, ErrorKind::BadInstance, "each edge must be a pair");
    ins.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("rotation")) ins.rotation = j["rotation"].get<std::vector<std::vector<int>>>();
  if (j.contains("infinite_face")) ins.infinite_face = j["infinite_face"].get<int>();
  if (j.contains("demand_edges")) ins.demand_edges = j["demand_edges"].get<std::vector<int>>();
  if (j.contains("demand_weights"))
    for (const auto& w : j["demand_weights"]) ins.demand_weights.push_back(parse_rat(w.get<std::string>()));
  if (j.contains("cycles")) ins.cycles = j["cycles"].get<std::vector<std::vector<int>>>();
  return ins;
}

inline void save_instance(const Instance& ins, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), ErrorKind::BadInstance, "cannot open instance file for writing: " + path);
  out << instance_to_json(ins).dump(2) << "\n";
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::BadInstance, "cannot open instance file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw Error(ErrorKind::BadInstance, std::string("instance file is not valid JSON: ") + ex.what());
  }
  return instance_from_json(j);
}

}  // namespace cyclepack
