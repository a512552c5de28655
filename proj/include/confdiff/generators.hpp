#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confdiff/error.hpp"
#include "confdiff/graph.hpp"
#include "confdiff/rng.hpp"

namespace confdiff {

enum class Family { complete, random, stochastic, scale_free };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::random: return "random";
    case Family::stochastic: return "stochastic";
    case Family::scale_free: return "scale-free";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "complete") return Family::complete;
  if (s == "random") return Family::random;
  if (s == "stochastic") return Family::stochastic;
  if (s == "scale-free" || s == "scale_free") return Family::scale_free;
  throw InputError("unknown network family '" + std::string(s) + "'");
}

inline constexpr double kDefaultEdgeProb = 0.5;

struct GeneratorSpec {
  Family family = Family::random;
  std::size_t n = 100;
  /// Only meaningful for Family::random; defaults to 1/2 there.
  std::optional<double> edge_prob;
  std::uint64_t seed = 0;

  double effective_edge_prob() const {
    return edge_prob.value_or(kDefaultEdgeProb);
  }

  void validate() const {
    if (n == 0) throw InputError("vertex count must be >= 1");
    if (edge_prob) {
      if (family != Family::random) {
        throw InputError("edge probability is only valid for the random family");
      }
      if (!(*edge_prob >= 0.0 && *edge_prob <= 1.0)) {
        throw InputError("edge probability must lie in [0, 1]");
      }
    }
  }
};

inline Graph gen_complete(std::size_t n) {
  if (n == 0) throw InputError("vertex count must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return Graph(n, std::move(edges));
}

/// Bernoulli(edge_prob) link per unordered pair. One uniform draw per pair,
/// pairs visited as (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline Graph gen_random(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (n == 0) throw InputError("vertex count must be >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (rng.bernoulli(edge_prob)) edges.push_back({i, j, 1.0});
  return Graph(n, std::move(edges));
}

/// Every unordered pair gets an edge with weight 1 - U, U ~ uniform[0, 1),
/// i.e. uniform on (0, 1]. Same pair order and draw count as gen_random.
inline Graph gen_stochastic(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("vertex count must be >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      edges.push_back({i, j, 1.0 - rng.uniform()});
  return Graph(n, std::move(edges));
}

/// Growth by preferential attachment, one edge per arriving vertex.
///
/// Vertex 1 attaches to vertex 0 without a draw (vertex 0 has degree 0).
/// Vertex t >= 2 draws one index uniformly from the 2(t-1) edge endpoints
/// seen so far and attaches to that endpoint, which selects an existing
/// vertex with probability degree / (2 * edges).
inline Graph gen_scale_free(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("vertex count must be >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<VertexId> endpoints;
  edges.reserve(n > 0 ? n - 1 : 0);
  endpoints.reserve(2 * n);
  for (VertexId t = 1; t < n; ++t) {
    VertexId target = 0;
    if (t >= 2) target = endpoints[rng.below(endpoints.size())];
    edges.push_back({target, t, 1.0});
    endpoints.push_back(target);
    endpoints.push_back(t);
  }
  return Graph(n, std::move(edges));
}

inline Graph generate(const GeneratorSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::complete: return gen_complete(spec.n);
    case Family::random:
      return gen_random(spec.n, spec.effective_edge_prob(), spec.seed);
    case Family::stochastic: return gen_stochastic(spec.n, spec.seed);
    case Family::scale_free: return gen_scale_free(spec.n, spec.seed);
  }
  throw InputError("unknown network family");
}

}  // namespace confdiff
