#pragma once

#include <string>

#include <json.hpp>

#include "confdiff/error.hpp"
#include "confdiff/graph.hpp"

namespace confdiff {

// JSON graph dump:
//   {"format": "confdiff-graph", "version": 1, "n": <int>,
//    "edges": [{"u": <int>, "v": <int>, "w": <number>}, ...]}
// Edges are written once each with u < v, sorted by (u, v).

inline constexpr const char* kGraphJsonFormat = "confdiff-graph";
inline constexpr int kGraphJsonVersion = 1;

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.weight}});
  }
  return {{"format", kGraphJsonFormat},
          {"version", kGraphJsonVersion},
          {"n", g.vertex_count()},
          {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    if (j.value("format", std::string{}) != kGraphJsonFormat) {
      throw FormatError("not a confdiff-graph document");
    }
    if (j.at("version").get<int>() != kGraphJsonVersion) {
      throw FormatError("unsupported graph version " + j.at("version").dump());
    }
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at("u").get<VertexId>(), e.at("v").get<VertexId>(),
                       e.value("w", 1.0)});
    }
    return Graph(n, std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("bad graph JSON: ") + ex.what());
  } catch (const InputError& ex) {
    throw FormatError(std::string("bad graph JSON: ") + ex.what());
  }
}

}  // namespace confdiff
