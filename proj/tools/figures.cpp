#include "figures.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include "cli_support.hpp"
#include "confdiff/analysis.hpp"
#include "confdiff/monte_carlo.hpp"
#include "confdiff/rng.hpp"

namespace confdiff::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::size_t> kInitialGrid{1, 2, 5, 10, 20, 50};
const std::vector<std::size_t> kConvergenceSizes{10, 30, 100, 300, 1000};

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

EnsembleConfig ensemble_for(const ExperimentConfig& cfg, std::size_t initial) {
  EnsembleConfig ec;
  ec.base = cfg.simulation(initial);
  ec.generator = cfg.generator;
  ec.replications = cfg.replications;
  ec.regenerate_graph = cfg.regenerate_graph;
  return ec;
}

std::string trajectory_grid(const ExperimentConfig& cfg, const fs::path& dir) {
  std::ostringstream report;
  for (auto k : cfg.initial) {
    const auto res = run_ensemble_detailed(ensemble_for(cfg, k));
    const std::string tag = "init" + std::to_string(k);
    write_file(dir / ("summary_" + tag + ".csv"), summary_csv(res.summary));
    write_file(dir / ("summary_" + tag + ".json"),
               summary_json(res.summary).dump(2) + "\n");
    write_file(dir / ("trajectory_" + tag + ".csv"),
               trajectory_csv(res.runs.front()));
    const auto& sat = res.summary.saturation;
    report << "initial " << k << ": mean saturation loop "
           << (sat.mean ? fmt("%.2f", *sat.mean) : std::string("n/a"))
           << ", censored " << sat.censored << "/" << res.summary.replications
           << "\n";
  }
  return report.str();
}

std::vector<double> loops_to_reach(const std::vector<Trajectory>& runs,
                                   std::size_t threshold, std::size_t horizon) {
  std::vector<double> out;
  for (const auto& t : first_passage_loops(runs, threshold)) {
    // Censored runs count at the horizon.
    out.push_back(static_cast<double>(t.value_or(horizon)));
  }
  return out;
}

std::string random_vs_stochastic(const ExperimentConfig& cfg,
                                 const fs::path& dir) {
  ExperimentConfig rnd = cfg;
  rnd.generator.family = Family::random;
  ExperimentConfig sto = cfg;
  sto.generator.family = Family::stochastic;
  sto.generator.edge_prob.reset();

  const std::size_t k = cfg.initial.front();
  const auto a = run_ensemble_detailed(ensemble_for(rnd, k));
  const auto b = run_ensemble_detailed(ensemble_for(sto, k));
  const auto cmp = compare_ensembles(a.summary, b.summary);

  const std::size_t n = cfg.generator.n;
  const std::size_t ninety = (9 * n + 9) / 10;
  const auto ta = loops_to_reach(a.runs, ninety, cfg.max_loops);
  const auto tb = loops_to_reach(b.runs, ninety, cfg.max_loops);
  const auto ci = bootstrap_mean_difference(ta, tb, 2000, 0.95,
                                            derive_seed(cfg.seed, 0xb007));

  write_file(dir / "random_summary.csv", summary_csv(a.summary));
  write_file(dir / "stochastic_summary.csv", summary_csv(b.summary));
  write_file(dir / "random_summary.json", summary_json(a.summary).dump(2) + "\n");
  write_file(dir / "stochastic_summary.json",
             summary_json(b.summary).dump(2) + "\n");
  json report = comparison_json(cmp);
  report["loops_to_90pct"] = {{"random_mean", mean_of(ta)},
                              {"stochastic_mean", mean_of(tb)},
                              {"difference", ci.estimate},
                              {"ci95_lower", ci.lower},
                              {"ci95_upper", ci.upper}};
  write_file(dir / "comparison.json", report.dump(2) + "\n");

  std::ostringstream out;
  out << "max |mean difference| " << fmt("%.3f", cmp.max_abs_difference)
      << " persons at loop " << cmp.loop_of_max << "\n"
      << "saturation time ratio (random/stochastic) "
      << (cmp.saturation_ratio ? fmt("%.4f", *cmp.saturation_ratio)
                               : std::string("n/a"))
      << "\n";
  return out.str();
}

std::string power_law(const ExperimentConfig& cfg, const fs::path& dir) {
  const std::size_t n = cfg.generator.n;
  DegreeHistogram total;
  double degree_one = 0.0;
  std::size_t max_degree = 0;
  double max_degree_sum = 0.0;
  for (std::size_t r = 0; r < cfg.replications; ++r) {
    GeneratorSpec spec = cfg.generator;
    spec.seed = derive_seed(cfg.generator.seed, r);
    const Graph g = generate(spec);
    const auto h = degree_histogram(g);
    if (r == 0) write_file(dir / "sample_histogram.csv", histogram_csv(h));
    for (const auto& [deg, c] : h) total[deg] += c;
    if (auto it = h.find(1); it != h.end()) {
      degree_one += static_cast<double>(it->second) / static_cast<double>(n);
    }
    const std::size_t top = h.rbegin()->first;
    max_degree = std::max(max_degree, top);
    max_degree_sum += static_cast<double>(top);
  }
  const double reps = static_cast<double>(cfg.replications);

  std::string csv = "degree,mean_count\n";
  for (const auto& [deg, c] : total) {
    csv += std::to_string(deg) + ',' + fmt("%.6f", c / reps) + '\n';
  }
  write_file(dir / "degree_histogram.csv", csv);

  json report = {{"graphs", cfg.replications},
                 {"n", n},
                 {"mean_fraction_degree_one", degree_one / reps},
                 {"mean_max_degree", max_degree_sum / reps},
                 {"max_degree", max_degree}};
  std::string fit_line = "power-law fit: n/a\n";
  try {
    const auto fit = fit_power_law(total);
    report["fit"] = power_law_json(fit);
    fit_line = "power-law slope " + fmt("%.4f", fit.slope) + "\n";
  } catch (const FitError&) {
    report["fit"] = nullptr;
  }
  write_file(dir / "power_law.json", report.dump(2) + "\n");
  return "mean fraction of degree-1 vertices " + fmt("%.4f", degree_one / reps) +
         "\nlargest hub degree " + std::to_string(max_degree) + "\n" + fit_line;
}

std::string matrix_average(const ExperimentConfig& cfg, const fs::path& dir) {
  std::vector<std::size_t> sizes;
  for (auto s : kConvergenceSizes)
    if (s < cfg.generator.n) sizes.push_back(s);
  sizes.push_back(cfg.generator.n);

  std::string csv = "family,n,mean_weight,mean_abs_error\n";
  std::ostringstream out;
  for (Family family : {Family::random, Family::stochastic}) {
    const std::optional<double> p =
        family == Family::random ? cfg.generator.edge_prob : std::nullopt;
    const double expected = family == Family::random
                                ? p.value_or(kDefaultEdgeProb)
                                : 0.5;
    for (auto n : sizes) {
      double sum = 0.0, err = 0.0;
      for (std::size_t r = 0; r < cfg.replications; ++r) {
        const auto pts = matrix_average_convergence(
            family, {n}, derive_seed(cfg.generator.seed, r), p);
        sum += pts.front().mean;
        err += std::abs(pts.front().mean - expected);
      }
      const double reps = static_cast<double>(cfg.replications);
      csv += std::string(to_string(family)) + ',' + std::to_string(n) + ',' +
             fmt("%.6f", sum / reps) + ',' + fmt("%.6f", err / reps) + '\n';
      if (n == sizes.back()) {
        out << to_string(family) << " n=" << n << ": mean weight "
            << fmt("%.4f", sum / reps) << "\n";
      }
    }
  }
  write_file(dir / "matrix_average.csv", csv);
  return out.str();
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{
      "random",       "stochastic",           "scale-free",    "complete",
      "power-law",    "random-vs-stochastic", "matrix-average"};
  return ids;
}

ExperimentConfig figure_defaults(const std::string& id, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.generator.n = 100;
  cfg.generator.seed = derive_seed(seed, 0);
  cfg.seed = derive_seed(seed, 1);
  cfg.max_loops = 1000;
  cfg.replications = 1000;
  cfg.regenerate_graph = true;
  cfg.initial = kInitialGrid;
  cfg.model = ContactModel::random_contact;

  if (id == "random") {
    cfg.generator.family = Family::random;
  } else if (id == "stochastic") {
    cfg.generator.family = Family::stochastic;
  } else if (id == "scale-free") {
    cfg.generator.family = Family::scale_free;
  } else if (id == "complete") {
    cfg.generator.family = Family::complete;
    cfg.model = ContactModel::broadcast;
    cfg.replications = 100;
  } else if (id == "random-vs-stochastic") {
    cfg.generator.family = Family::random;
    cfg.initial = {10};
  } else if (id == "power-law") {
    cfg.generator.family = Family::scale_free;
    cfg.replications = 200;
    cfg.initial = {1};
  } else if (id == "matrix-average") {
    cfg.generator.family = Family::random;
    cfg.generator.n = 1000;
    cfg.replications = 30;
    cfg.initial = {1};
  } else {
    throw UsageError("unknown figure id '" + id + "'");
  }
  return cfg;
}

std::string run_figure(const std::string& id, const ExperimentConfig& cfg,
                       const fs::path& dir) {
  cfg.validate();
  write_file(dir / "manifest.ini", manifest_text(id, cfg));
  if (id == "random" || id == "stochastic" || id == "scale-free" ||
      id == "complete") {
    return trajectory_grid(cfg, dir);
  }
  if (id == "random-vs-stochastic") return random_vs_stochastic(cfg, dir);
  if (id == "power-law") return power_law(cfg, dir);
  if (id == "matrix-average") return matrix_average(cfg, dir);
  throw UsageError("unknown figure id '" + id + "'");
}

std::string manifest_text(const std::string& id, const ExperimentConfig& cfg) {
  return "[reproduce]\nfigure = " + id + "\nrng = " + Rng::algorithm +
         "\n\n" + format_experiment_config(cfg);
}

Manifest parse_manifest(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw FormatError(std::string("manifest: ") + e.message(), e.line());
  }
  Manifest m;
  m.figure = tree.get<std::string>("reproduce.figure", "");
  if (m.figure.empty()) throw FormatError("manifest: missing reproduce.figure");
  const auto rng = tree.get<std::string>("reproduce.rng", Rng::algorithm);
  if (rng != Rng::algorithm) {
    throw FormatError("manifest: generated with " + rng + ", this build uses " +
                      Rng::algorithm);
  }
  m.config = parse_experiment_config(text);
  return m;
}

}  // namespace confdiff::cli
