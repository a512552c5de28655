#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "confdiff/diffusion.hpp"
#include "confdiff/error.hpp"
#include "confdiff/generators.hpp"
#include "confdiff/rng.hpp"

namespace confdiff {

struct EnsembleConfig {
  SimulationConfig base;
  GeneratorSpec generator;
  std::size_t replications = 1000;
  /// Fresh graph per replication; otherwise the graph from generator.seed is
  /// shared by every replication.
  bool regenerate_graph = true;
  /// Worker threads; 0 picks hardware_concurrency. Results do not depend on it.
  unsigned threads = 0;
};

/// Seeds of replication r:
///   simulation: derive_seed(base.seed, r)
///   graph:      derive_seed(generator.seed, r) when regenerating,
///               generator.seed otherwise.
inline std::uint64_t replication_sim_seed(const EnsembleConfig& cfg,
                                          std::size_t r) {
  return derive_seed(cfg.base.seed, r);
}

inline std::uint64_t replication_graph_seed(const EnsembleConfig& cfg,
                                            std::size_t r) {
  return cfg.regenerate_graph ? derive_seed(cfg.generator.seed, r)
                              : cfg.generator.seed;
}

/// Runs every replication; element r is replication r regardless of thread
/// scheduling.
inline std::vector<Trajectory> run_replications(const EnsembleConfig& cfg) {
  if (cfg.replications < 1) throw InputError("replications must be >= 1");
  cfg.generator.validate();
  cfg.base.validate(cfg.generator.n);

  // Graphs that do not depend on the seed are built once.
  const bool shared_graph =
      !cfg.regenerate_graph || cfg.generator.family == Family::complete;
  std::optional<Graph> fixed;
  if (shared_graph) fixed = generate(cfg.generator);

  std::vector<Trajectory> out(cfg.replications);
  auto work = [&](std::size_t r) {
    SimulationConfig sim = cfg.base;
    sim.seed = replication_sim_seed(cfg, r);
    if (fixed) {
      out[r] = run(*fixed, sim);
    } else {
      GeneratorSpec spec = cfg.generator;
      spec.seed = replication_graph_seed(cfg, r);
      out[r] = run(generate(spec), sim);
    }
  };

  unsigned threads = cfg.threads ? cfg.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, cfg.replications));
  if (threads <= 1) {
    for (std::size_t r = 0; r < cfg.replications; ++r) work(r);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t r; (r = next++) < cfg.replications && !failed;) {
          try {
            work(r);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

struct LoopStats {
  double mean = 0.0;
  double sd = 0.0;
  std::size_t p10 = 0;
  std::size_t p50 = 0;
  std::size_t p90 = 0;
};

struct SaturationStats {
  std::size_t saturated = 0;
  std::size_t censored = 0;
  std::optional<double> mean;  // over saturated runs only
  std::optional<std::size_t> p10, p50, p90;
};

struct EnsembleSummary {
  std::size_t n = 0;
  std::size_t horizon = 0;  // last loop index; per_loop has horizon + 1 rows
  std::size_t replications = 0;
  std::vector<LoopStats> per_loop;
  SaturationStats saturation;
};

/// Nearest-rank percentile: the ceil(p/100 * N)-th smallest value.
inline std::size_t nearest_rank(std::span<const std::size_t> sorted,
                                unsigned percent) {
  const std::size_t n = sorted.size();
  std::size_t rank = (static_cast<std::size_t>(percent) * n + 99) / 100;
  rank = std::clamp<std::size_t>(rank, 1, n);
  return sorted[rank - 1];
}

/// Aggregates trajectories over loops 0..horizon. Shorter trajectories are
/// padded with their final count. Sums are exact integer sums, so the result
/// is independent of replication order.
inline EnsembleSummary summarize(std::span<const Trajectory> runs,
                                 std::size_t n, std::size_t horizon) {
  if (runs.empty()) throw InputError("cannot summarize zero replications");
  EnsembleSummary s;
  s.n = n;
  s.horizon = horizon;
  s.replications = runs.size();
  const std::size_t reps = runs.size();

  std::vector<std::size_t> column(reps);
  s.per_loop.resize(horizon + 1);
  for (std::size_t t = 0; t <= horizon; ++t) {
    unsigned __int128 sum = 0, sum_sq = 0;
    for (std::size_t r = 0; r < reps; ++r) {
      const auto& c = runs[r].counts;
      const std::size_t x = t < c.size() ? c[t] : c.back();
      column[r] = x;
      sum += x;
      sum_sq += static_cast<unsigned __int128>(x) * x;
    }
    auto& ls = s.per_loop[t];
    ls.mean = static_cast<double>(static_cast<long double>(sum) / reps);
    if (reps > 1) {
      const auto num = static_cast<long double>(sum_sq * reps - sum * sum);
      ls.sd = static_cast<double>(
          std::sqrt(num / (static_cast<long double>(reps) * (reps - 1))));
    }
    std::sort(column.begin(), column.end());
    ls.p10 = nearest_rank(column, 10);
    ls.p50 = nearest_rank(column, 50);
    ls.p90 = nearest_rank(column, 90);
  }

  std::vector<std::size_t> times;
  for (const auto& run : runs) {
    if (auto t = run.first_loop_reaching(n); t && *t <= horizon) {
      times.push_back(*t);
    } else {
      ++s.saturation.censored;
    }
  }
  s.saturation.saturated = times.size();
  if (!times.empty()) {
    std::sort(times.begin(), times.end());
    std::uint64_t total = 0;
    for (auto t : times) total += t;
    s.saturation.mean = static_cast<double>(total) / times.size();
    s.saturation.p10 = nearest_rank(times, 10);
    s.saturation.p50 = nearest_rank(times, 50);
    s.saturation.p90 = nearest_rank(times, 90);
  }
  return s;
}

struct EnsembleResult {
  std::vector<Trajectory> runs;
  EnsembleSummary summary;
};

inline EnsembleResult run_ensemble_detailed(const EnsembleConfig& cfg) {
  EnsembleResult res;
  res.runs = run_replications(cfg);
  res.summary = summarize(res.runs, cfg.generator.n, cfg.base.max_loops);
  return res;
}

inline EnsembleSummary run_ensemble(const EnsembleConfig& cfg) {
  return run_ensemble_detailed(cfg).summary;
}

struct EnsembleComparison {
  std::vector<double> mean_difference;  // a - b per loop
  double max_abs_difference = 0.0;
  std::size_t loop_of_max = 0;
  /// mean saturation time of a over that of b; empty if either is undefined.
  std::optional<double> saturation_ratio;
};

inline EnsembleComparison compare_ensembles(const EnsembleSummary& a,
                                            const EnsembleSummary& b) {
  if (a.n != b.n) throw InputError("ensembles have different vertex counts");
  if (a.horizon != b.horizon) {
    throw InputError("ensembles have different loop horizons");
  }
  EnsembleComparison c;
  c.mean_difference.resize(a.per_loop.size());
  for (std::size_t t = 0; t < a.per_loop.size(); ++t) {
    const double d = a.per_loop[t].mean - b.per_loop[t].mean;
    c.mean_difference[t] = d;
    if (std::abs(d) > c.max_abs_difference) {
      c.max_abs_difference = std::abs(d);
      c.loop_of_max = t;
    }
  }
  if (a.saturation.mean && b.saturation.mean && *b.saturation.mean > 0.0) {
    c.saturation_ratio = *a.saturation.mean / *b.saturation.mean;
  }
  return c;
}

/// First loop reaching `threshold` for each run; nullopt for censored runs.
inline std::vector<std::optional<std::size_t>> first_passage_loops(
    std::span<const Trajectory> runs, std::size_t threshold) {
  std::vector<std::optional<std::size_t>> out;
  out.reserve(runs.size());
  for (const auto& r : runs) out.push_back(r.first_loop_reaching(threshold));
  return out;
}

struct BootstrapInterval {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

inline double mean_of(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

/// Percentile bootstrap for mean(a) - mean(b). Each resample draws |a| then
/// |b| indices with Rng::below; interval endpoints are nearest-rank
/// percentiles of the sorted resampled differences.
inline BootstrapInterval bootstrap_mean_difference(std::span<const double> a,
                                                   std::span<const double> b,
                                                   std::size_t resamples,
                                                   double level,
                                                   std::uint64_t seed) {
  if (a.empty() || b.empty()) throw InputError("bootstrap needs two non-empty samples");
  if (resamples < 1) throw InputError("bootstrap needs at least one resample");
  if (!(level > 0.0 && level < 1.0)) throw InputError("level must lie in (0, 1)");
  Rng rng(seed);
  std::vector<double> diffs(resamples);
  for (auto& d : diffs) {
    double sa = 0.0, sb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sa += a[rng.below(a.size())];
    for (std::size_t i = 0; i < b.size(); ++i) sb += b[rng.below(b.size())];
    d = sa / a.size() - sb / b.size();
  }
  std::sort(diffs.begin(), diffs.end());
  auto pick = [&](double q) {
    auto rank = static_cast<std::size_t>(std::ceil(q * resamples));
    rank = std::clamp<std::size_t>(rank, 1, resamples);
    return diffs[rank - 1];
  };
  const double tail = (1.0 - level) / 2.0;
  return {mean_of(a) - mean_of(b), pick(tail), pick(1.0 - tail)};
}

namespace detail {
inline std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}
}  // namespace detail

/// CSV: loop,mean,sd,p10,p50,p90 (mean and sd with six decimals).
inline std::string summary_csv(const EnsembleSummary& s) {
  std::string out = "loop,mean,sd,p10,p50,p90\n";
  for (std::size_t t = 0; t < s.per_loop.size(); ++t) {
    const auto& l = s.per_loop[t];
    out += std::to_string(t) + ',' + detail::fixed6(l.mean) + ',' +
           detail::fixed6(l.sd) + ',' + std::to_string(l.p10) + ',' +
           std::to_string(l.p50) + ',' + std::to_string(l.p90) + '\n';
  }
  return out;
}

inline nlohmann::json summary_json(const EnsembleSummary& s) {
  nlohmann::json loops = nlohmann::json::array();
  for (const auto& l : s.per_loop) {
    loops.push_back({{"mean", l.mean},
                     {"sd", l.sd},
                     {"p10", l.p10},
                     {"p50", l.p50},
                     {"p90", l.p90}});
  }
  auto opt = [](const auto& o) -> nlohmann::json {
    return o ? nlohmann::json(*o) : nlohmann::json(nullptr);
  };
  return {{"n", s.n},
          {"horizon", s.horizon},
          {"replications", s.replications},
          {"saturation",
           {{"saturated", s.saturation.saturated},
            {"censored", s.saturation.censored},
            {"mean", opt(s.saturation.mean)},
            {"p10", opt(s.saturation.p10)},
            {"p50", opt(s.saturation.p50)},
            {"p90", opt(s.saturation.p90)}}},
          {"per_loop", std::move(loops)}};
}

inline nlohmann::json comparison_json(const EnsembleComparison& c) {
  return {{"max_abs_mean_difference", c.max_abs_difference},
          {"loop_of_max_difference", c.loop_of_max},
          {"saturation_time_ratio",
           c.saturation_ratio ? nlohmann::json(*c.saturation_ratio)
                              : nlohmann::json(nullptr)},
          {"mean_difference", c.mean_difference}};
}

}  // namespace confdiff
