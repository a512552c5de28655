#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "confdiff/error.hpp"

namespace confdiff {

using VertexId = std::uint32_t;

/// Undirected edge {u, v} carrying a transmission probability.
struct Edge {
  VertexId u;
  VertexId v;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId id;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Count of vertices per degree, keyed by degree.
using DegreeHistogram = std::map<std::size_t, std::size_t>;

/// Immutable undirected graph with per-edge probabilities in (0, 1].
///
/// Adjacency lists are sorted by neighbor id; the edge list is sorted by
/// (min endpoint, max endpoint) and stores every edge once with u < v.
/// Weight-0 edges are dropped on construction: an absent edge and an edge
/// that never transmits are the same thing.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Builds from an edge list. Endpoints may come in either order.
  /// Throws InputError on self-loops, duplicate pairs, out-of-range
  /// endpoints or weights outside [0, 1].
  Graph(std::size_t n, std::vector<Edge> edges) : adjacency_(n) {
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw InputError("edge endpoint out of range: {" + std::to_string(e.u) +
                         ", " + std::to_string(e.v) + "} with n = " +
                         std::to_string(n));
      }
      if (e.u == e.v) {
        throw InputError("self-loop on vertex " + std::to_string(e.u));
      }
      if (!(e.weight >= 0.0 && e.weight <= 1.0)) {
        throw InputError("edge weight outside [0, 1]: " +
                         std::to_string(e.weight));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::erase_if(edges, [](const Edge& e) { return e.weight == 0.0; });
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
        throw InputError("duplicate edge {" + std::to_string(edges[i].u) +
                         ", " + std::to_string(edges[i].v) + "}");
      }
    }
    for (const auto& e : edges) {
      adjacency_[e.u].push_back({e.v, e.weight});
      adjacency_[e.v].push_back({e.u, e.weight});
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    }
    edges_ = std::move(edges);
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(VertexId v) const {
    check_vertex(v);
    return adjacency_[v].size();
  }

  /// Weight of {u, v}, 0 when absent. O(log degree).
  double weight(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adjacency_[u];
    auto it = std::lower_bound(
        list.begin(), list.end(), v,
        [](const Neighbor& a, VertexId id) { return a.id < id; });
    return (it != list.end() && it->id == v) ? it->weight : 0.0;
  }

  bool has_edge(VertexId u, VertexId v) const { return weight(u, v) > 0.0; }

  /// True when every stored edge has weight exactly 1.
  bool is_unweighted() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.weight == 1.0; });
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(VertexId v) const {
    if (v >= adjacency_.size()) {
      throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                       std::to_string(adjacency_.size()) + ")");
    }
  }

  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Edge> edges_;
};

inline std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

inline DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++h[g.degree(v)];
  return h;
}

/// Mean of w_ij over all ordered pairs i != j, absent edges counting as 0.
inline double mean_offdiagonal_weight(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InputError("mean off-diagonal weight needs n >= 2");
  double sum = 0.0;
  for (const auto& e : g.edges()) sum += e.weight;
  return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace confdiff
