#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "confdiff/error.hpp"
#include "confdiff/generators.hpp"
#include "confdiff/graph.hpp"

namespace confdiff {

struct AverageWeightPoint {
  std::size_t n;
  double mean;
};

/// Generates `family` at each size with `seed` and reports the mean
/// off-diagonal weight. edge_prob applies to the random family only.
inline std::vector<AverageWeightPoint> matrix_average_convergence(
    Family family, const std::vector<std::size_t>& sizes, std::uint64_t seed,
    std::optional<double> edge_prob = std::nullopt) {
  if (sizes.empty()) throw InputError("sizes must be non-empty");
  std::vector<AverageWeightPoint> out;
  out.reserve(sizes.size());
  for (auto n : sizes) {
    GeneratorSpec spec{family, n, edge_prob, seed};
    out.push_back({n, mean_offdiagonal_weight(generate(spec))});
  }
  return out;
}

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points_used = 0;
};

/// Ordinary least squares of ln(count) on ln(k) over k >= 1 with count > 0.
inline PowerLawFit fit_power_law(const DegreeHistogram& h) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [k, count] : h) {
    if (k >= 1 && count > 0) {
      pts.emplace_back(std::log(static_cast<double>(k)),
                       std::log(static_cast<double>(count)));
    }
  }
  if (pts.size() < 2) {
    throw FitError("power-law fit needs at least two degrees with k >= 1");
  }
  const double m = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points_used = pts.size();
  return fit;
}

/// Mean local clustering; vertices of degree < 2 count as 0. Weights are
/// ignored.
inline double clustering_coefficient(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("clustering coefficient needs n >= 1");
  std::vector<char> mark(n, 0);
  double total = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    for (const auto& a : nbrs) mark[a.id] = 1;
    std::size_t links = 0;
    for (const auto& a : nbrs)
      for (const auto& b : g.neighbors(a.id))
        if (b.id > a.id && mark[b.id]) ++links;
    for (const auto& a : nbrs) mark[a.id] = 0;
    total += static_cast<double>(links) /
             (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
  }
  return total / static_cast<double>(n);
}

/// Hop distances from `source`; unreachable vertices get max().
inline std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), inf);
  std::queue<VertexId> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    for (const auto& nb : g.neighbors(v)) {
      if (dist[nb.id] == inf) {
        dist[nb.id] = dist[v] + 1;
        q.push(nb.id);
      }
    }
  }
  return dist;
}

/// Connected components as a label per vertex, labels 0..count-1 in order of
/// smallest member.
inline std::vector<std::size_t> component_labels(const Graph& g,
                                                 std::size_t* count = nullptr) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.vertex_count(), none);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != none) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (label[nb.id] == none) {
          label[nb.id] = next;
          stack.push_back(nb.id);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

inline bool is_connected(const Graph& g) {
  std::size_t count = 0;
  component_labels(g, &count);
  return count <= 1;
}

struct PathLengthResult {
  double mean = 0.0;            // over unordered pairs of the measured component
  bool connected = true;
  std::size_t component_size = 0;  // vertices the mean was taken over
};

/// Mean shortest-path hop count over unordered pairs. A disconnected graph is
/// measured on its largest component (smallest label on ties) and flagged.
inline PathLengthResult characteristic_path_length(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("characteristic path length needs n >= 1");
  std::size_t count = 0;
  const auto label = component_labels(g, &count);
  std::vector<std::size_t> sizes(count, 0);
  for (auto l : label) ++sizes[l];
  const auto largest = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  PathLengthResult res;
  res.connected = count == 1;
  res.component_size = sizes[largest];
  std::uint64_t total = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != largest) continue;
    const auto dist = bfs_distances(g, s);
    for (VertexId t = s + 1; t < n; ++t)
      if (label[t] == largest) total += dist[t];
  }
  const std::size_t m = res.component_size;
  const std::uint64_t pairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  res.mean = pairs ? static_cast<double>(total) / static_cast<double>(pairs) : 0.0;
  return res;
}

/// CSV: degree,count in ascending degree.
inline std::string histogram_csv(const DegreeHistogram& h) {
  std::string out = "degree,count\n";
  for (const auto& [k, c] : h) {
    out += std::to_string(k) + ',' + std::to_string(c) + '\n';
  }
  return out;
}

inline nlohmann::json histogram_json(const DegreeHistogram& h) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : h) arr.push_back({{"degree", k}, {"count", c}});
  return arr;
}

inline nlohmann::json power_law_json(const PowerLawFit& f) {
  return {{"slope", f.slope},
          {"intercept", f.intercept},
          {"points_used", f.points_used}};
}

}  // namespace confdiff
