#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confdiff/error.hpp"
#include "confdiff/graph.hpp"
#include "confdiff/rng.hpp"

namespace confdiff {

/// broadcast: each informed vertex tries every neighbor every loop.
/// random_contact: each informed vertex tries one uniformly chosen neighbor.
/// uniform_contact: each informed vertex tries one uniformly chosen other
///   vertex; the attempt succeeds with the pair's weight (0 when unlinked).
enum class ContactModel { broadcast, random_contact, uniform_contact };

inline std::string_view to_string(ContactModel m) {
  switch (m) {
    case ContactModel::broadcast: return "broadcast";
    case ContactModel::random_contact: return "random-contact";
    case ContactModel::uniform_contact: return "uniform-contact";
  }
  return "?";
}

inline ContactModel parse_contact_model(std::string_view s) {
  if (s == "broadcast") return ContactModel::broadcast;
  if (s == "random-contact" || s == "random_contact") {
    return ContactModel::random_contact;
  }
  if (s == "uniform-contact" || s == "uniform_contact") {
    return ContactModel::uniform_contact;
  }
  throw InputError("unknown contact model '" + std::string(s) + "'");
}

struct SimulationConfig {
  ContactModel model = ContactModel::random_contact;
  std::size_t initial_informed = 1;
  std::size_t max_loops = 1000;
  std::uint64_t seed = 0;
  /// When non-empty, these vertices start informed and initial_informed is
  /// ignored. No random draws are spent on seeding in that case.
  std::vector<VertexId> initial_vertices;

  void validate(std::size_t n) const {
    if (max_loops < 1) throw InputError("max_loops must be >= 1");
    if (initial_vertices.empty()) {
      if (initial_informed < 1 || initial_informed > n) {
        throw InputError("initial informed count " +
                         std::to_string(initial_informed) +
                         " outside [1, " + std::to_string(n) + "]");
      }
      return;
    }
    std::vector<char> seen(n, 0);
    for (auto v : initial_vertices) {
      if (v >= n) {
        throw InputError("initial vertex " + std::to_string(v) +
                         " out of range");
      }
      if (seen[v]++) {
        throw InputError("initial vertex " + std::to_string(v) + " repeated");
      }
    }
  }
};

struct DiffusionState {
  std::vector<char> informed;  // one flag per vertex
  std::size_t informed_count = 0;
  std::size_t loop = 0;

  bool is_informed(VertexId v) const { return informed[v] != 0; }
  bool saturated() const { return informed_count == informed.size(); }

  friend bool operator==(const DiffusionState&, const DiffusionState&) = default;
};

/// Seeds the informed set, drawing from `rng` (partial Fisher-Yates:
/// slot i swaps with i + below(n - i) for i < k).
inline DiffusionState init_state(const Graph& g, const SimulationConfig& cfg,
                                 Rng& rng) {
  const std::size_t n = g.vertex_count();
  cfg.validate(n);
  DiffusionState s;
  s.informed.assign(n, 0);
  if (!cfg.initial_vertices.empty()) {
    for (auto v : cfg.initial_vertices) s.informed[v] = 1;
    s.informed_count = cfg.initial_vertices.size();
    return s;
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  for (std::size_t i = 0; i < cfg.initial_informed; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(order[i], order[j]);
    s.informed[order[i]] = 1;
  }
  s.informed_count = cfg.initial_informed;
  return s;
}

inline DiffusionState init_state(const Graph& g, const SimulationConfig& cfg) {
  Rng rng(cfg.seed);
  return init_state(g, cfg, rng);
}

/// One synchronous loop. Vertices informed during this loop transmit from
/// the next loop on.
///
/// Draw order (part of the reproducibility contract): informed vertices in
/// ascending id.
///   broadcast: for each neighbor in ascending id that was uninformed at the
///     start of the loop, one uniform draw; success iff draw < weight.
///   random_contact: vertices with no neighbors draw nothing; otherwise one
///     below(degree) draw picks the neighbor, then one uniform draw decides
///     success (draw < weight). Both draws happen even when the chosen
///     neighbor already knows.
///   uniform_contact: with n >= 2, one below(n - 1) draw r picks vertex r
///     (r + 1 when r >= own id), then one uniform draw decides success
///     (draw < weight, weight 0 for unlinked pairs).
inline DiffusionState step(const Graph& g, const DiffusionState& s,
                           ContactModel model, Rng& rng) {
  DiffusionState next = s;
  const std::size_t n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    if (!s.informed[v]) continue;
    const auto nbrs = g.neighbors(v);
    if (model == ContactModel::broadcast) {
      for (const auto& nb : nbrs) {
        if (s.informed[nb.id]) continue;
        if (rng.bernoulli(nb.weight) && !next.informed[nb.id]) {
          next.informed[nb.id] = 1;
          ++next.informed_count;
        }
      }
    } else if (model == ContactModel::random_contact) {
      if (nbrs.empty()) continue;
      const auto& nb = nbrs[rng.below(nbrs.size())];
      if (rng.bernoulli(nb.weight) && !next.informed[nb.id]) {
        next.informed[nb.id] = 1;
        ++next.informed_count;
      }
    } else {
      if (n < 2) continue;
      auto target = static_cast<VertexId>(rng.below(n - 1));
      if (target >= v) ++target;
      if (rng.bernoulli(g.weight(v, target)) && !next.informed[target]) {
        next.informed[target] = 1;
        ++next.informed_count;
      }
    }
  }
  ++next.loop;
  return next;
}

/// Informed counts indexed by loop; counts[0] is the initial set.
struct Trajectory {
  std::vector<std::size_t> counts;

  std::size_t final_count() const { return counts.empty() ? 0 : counts.back(); }

  /// First loop with at least `threshold` informed vertices.
  std::optional<std::size_t> first_loop_reaching(std::size_t threshold) const {
    for (std::size_t t = 0; t < counts.size(); ++t)
      if (counts[t] >= threshold) return t;
    return std::nullopt;
  }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Steps until every vertex is informed or max_loops is reached. One Rng
/// seeded with cfg.seed drives seeding and then every step.
inline Trajectory run(const Graph& g, const SimulationConfig& cfg) {
  Rng rng(cfg.seed);
  DiffusionState s = init_state(g, cfg, rng);
  Trajectory out;
  out.counts.reserve(64);
  out.counts.push_back(s.informed_count);
  while (!s.saturated() && s.loop < cfg.max_loops) {
    s = step(g, s, cfg.model, rng);
    out.counts.push_back(s.informed_count);
  }
  return out;
}

/// CSV: header "loop,informed_count", LF line endings.
inline std::string trajectory_csv(const Trajectory& t) {
  std::string out = "loop,informed_count\n";
  for (std::size_t i = 0; i < t.counts.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(t.counts[i]);
    out += '\n';
  }
  return out;
}

}  // namespace confdiff
