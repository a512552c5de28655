// confdiff: generate networks, simulate diffusion, analyze structure and
// reproduce the canned experiments.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_support.hpp"
#include "confdiff/analysis.hpp"
#include "confdiff/experiment.hpp"
#include "confdiff/graph_json.hpp"
#include "confdiff/matrix_io.hpp"
#include "confdiff/monte_carlo.hpp"
#include "figures.hpp"

namespace fs = std::filesystem;
using namespace confdiff;
using namespace confdiff::cli;

namespace {

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

Graph load_graph(const fs::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
    return graph_from_json(j);
  }
  return import_matrix(text);
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<double> edge_prob;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string prefix;
};

int cmd_generate(const GenerateArgs& a) {
  GeneratorSpec spec;
  spec.family = parse_family(a.family);
  spec.n = a.n;
  spec.edge_prob = a.edge_prob;
  if (!a.seed) std::cout << "seed: 1 (default)\n";
  spec.seed = a.seed.value_or(1);
  spec.validate();

  const Graph g = generate(spec);
  const fs::path dir = resolve_out_dir(a.out_dir);
  const std::string prefix =
      a.prefix.empty() ? std::string(to_string(spec.family)) + "_n" +
                             std::to_string(spec.n) + "_s" +
                             std::to_string(spec.seed)
                       : a.prefix;
  const fs::path matrix = dir / (prefix + ".matrix.txt");
  write_file(matrix, g.is_unweighted() ? export_link_matrix(g)
                                       : export_probability_matrix(g));
  const fs::path dump = dir / (prefix + ".json");
  write_file(dump, graph_to_json(g).dump() + "\n");

  std::cout << "vertices: " << g.vertex_count() << "\n"
            << "edges: " << g.edge_count() << "\n";
  if (g.vertex_count() >= 2) {
    const double pairs = static_cast<double>(g.vertex_count()) *
                         static_cast<double>(g.vertex_count() - 1) / 2.0;
    std::cout << "density: " << fixed(g.edge_count() / pairs) << "\n"
              << "mean weight: " << fixed(mean_offdiagonal_weight(g)) << "\n";
  }
  std::cout << "wrote " << matrix.string() << " " << dump.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string config;
  std::string graph;
  std::string family;
  std::optional<std::size_t> n;
  std::optional<double> edge_prob;
  std::optional<std::uint64_t> graph_seed;
  std::string model;
  std::vector<std::size_t> initial;
  std::vector<VertexId> initial_vertices;
  std::optional<std::size_t> max_loops;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> replications;
  bool fixed_graph = false;
  unsigned threads = 0;
  std::string out_dir;
};

int cmd_simulate(const SimulateArgs& a) {
  ExperimentConfig cfg;
  bool seed_given = false;
  if (!a.config.empty()) {
    cfg = parse_experiment_config(read_file(a.config));
    seed_given = true;
  }
  if (!a.family.empty()) cfg.generator.family = parse_family(a.family);
  if (a.n) cfg.generator.n = *a.n;
  if (a.edge_prob) cfg.generator.edge_prob = a.edge_prob;
  if (a.graph_seed) cfg.generator.seed = *a.graph_seed;
  if (!a.model.empty()) cfg.model = parse_contact_model(a.model);
  if (!a.initial.empty()) cfg.initial = a.initial;
  if (!a.initial_vertices.empty()) cfg.initial_vertices = a.initial_vertices;
  if (a.max_loops) cfg.max_loops = *a.max_loops;
  if (a.seed) {
    cfg.seed = *a.seed;
    seed_given = true;
  }
  if (a.replications) cfg.replications = *a.replications;
  if (a.fixed_graph) cfg.regenerate_graph = false;

  std::optional<Graph> loaded;
  if (!a.graph.empty()) {
    loaded = load_graph(a.graph);
    cfg.generator.n = loaded->vertex_count();
    if (cfg.replications > 1) cfg.regenerate_graph = false;
  }
  if (!seed_given) std::cout << "seed: " << cfg.seed << " (default)\n";
  cfg.validate();

  const fs::path dir =
      resolve_out_dir(a.out_dir.empty() ? cfg.output_dir : a.out_dir);
  const std::vector<std::size_t> grid =
      cfg.initial_vertices.empty() ? cfg.initial
                                   : std::vector<std::size_t>{cfg.initial_vertices.size()};

  for (auto k : grid) {
    const std::string tag = "init" + std::to_string(k);
    if (cfg.replications == 1) {
      const Graph g = loaded ? *loaded : generate(cfg.generator);
      const Trajectory t = run(g, cfg.simulation(k));
      write_file(dir / ("trajectory_" + tag + ".csv"), trajectory_csv(t));
      const auto sat = t.first_loop_reaching(g.vertex_count());
      std::cout << "initial " << k << ": "
                << (sat ? "saturated at loop " + std::to_string(*sat)
                        : "not saturated after " +
                              std::to_string(cfg.max_loops) + " loops (" +
                              std::to_string(t.final_count()) + " informed)")
                << "\n";
      continue;
    }
    EnsembleResult res;
    EnsembleConfig ec;
    ec.base = cfg.simulation(k);
    ec.generator = cfg.generator;
    ec.replications = cfg.replications;
    ec.regenerate_graph = cfg.regenerate_graph;
    ec.threads = a.threads;
    if (loaded) {
      res.runs.resize(cfg.replications);
      for (std::size_t r = 0; r < cfg.replications; ++r) {
        SimulationConfig sim = ec.base;
        sim.seed = replication_sim_seed(ec, r);
        res.runs[r] = run(*loaded, sim);
      }
      res.summary = summarize(res.runs, cfg.generator.n, cfg.max_loops);
    } else {
      res = run_ensemble_detailed(ec);
    }
    write_file(dir / ("summary_" + tag + ".csv"), summary_csv(res.summary));
    write_file(dir / ("summary_" + tag + ".json"),
               summary_json(res.summary).dump(2) + "\n");
    const auto& sat = res.summary.saturation;
    std::cout << "initial " << k << ": mean saturation loop "
              << (sat.mean ? fixed(*sat.mean, 2) : std::string("n/a"))
              << ", censored " << sat.censored << "/" << cfg.replications
              << "\n";
  }
  std::cout << "wrote " << dir.string() << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string graph;
  std::string stat;
  std::string format = "csv";
  std::string out;
  std::string family;
  std::vector<std::size_t> sizes;
  std::optional<double> edge_prob;
  std::uint64_t seed = 1;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const bool as_json = a.format == "json";
  std::string output;

  if (a.stat == "convergence") {
    if (a.family.empty() || a.sizes.empty()) {
      throw UsageError("--stat convergence needs --family and --sizes");
    }
    const auto pts = matrix_average_convergence(parse_family(a.family), a.sizes,
                                                a.seed, a.edge_prob);
    if (as_json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : pts) arr.push_back({{"n", p.n}, {"mean", p.mean}});
      output = arr.dump(2) + "\n";
    } else {
      output = "n,mean\n";
      for (const auto& p : pts) {
        output += std::to_string(p.n) + ',' + fixed(p.mean) + '\n';
      }
    }
  } else {
    if (a.graph.empty()) throw UsageError("--graph is required for --stat " + a.stat);
    const Graph g = load_graph(a.graph);
    if (a.stat == "degree-histogram") {
      const auto h = degree_histogram(g);
      output = as_json ? histogram_json(h).dump(2) + "\n" : histogram_csv(h);
    } else if (a.stat == "power-law") {
      const auto fit = fit_power_law(degree_histogram(g));
      output = as_json ? power_law_json(fit).dump(2) + "\n"
                       : "slope,intercept,points_used\n" + fixed(fit.slope) +
                             ',' + fixed(fit.intercept) + ',' +
                             std::to_string(fit.points_used) + '\n';
    } else if (a.stat == "clustering") {
      const double c = clustering_coefficient(g);
      output = as_json ? nlohmann::json{{"clustering_coefficient", c}}.dump(2) + "\n"
                       : "statistic,value\nclustering_coefficient," + fixed(c) + '\n';
    } else if (a.stat == "path-length") {
      const auto p = characteristic_path_length(g);
      output = as_json
                   ? nlohmann::json{{"characteristic_path_length", p.mean},
                                    {"connected", p.connected},
                                    {"component_size", p.component_size}}
                             .dump(2) + "\n"
                   : "statistic,value\ncharacteristic_path_length," +
                         fixed(p.mean) + "\nconnected," +
                         (p.connected ? "1" : "0") + "\ncomponent_size," +
                         std::to_string(p.component_size) + '\n';
    } else if (a.stat == "matrix-mean") {
      const double m = mean_offdiagonal_weight(g);
      output = as_json ? nlohmann::json{{"mean_offdiagonal_weight", m}}.dump(2) + "\n"
                       : "statistic,value\nmean_offdiagonal_weight," + fixed(m) + '\n';
    } else {
      throw UsageError("unknown statistic '" + a.stat + "'");
    }
  }

  if (a.out.empty()) {
    std::cout << output;
  } else {
    write_file(a.out, output);
  }
  return kExitOk;
}

// --------------------------------------------------------------- reproduce

struct ReproduceArgs {
  std::string figure;
  std::string manifest;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> replications;
  std::optional<std::size_t> n;
  std::string model;
  std::string out_dir;
};

int cmd_reproduce(const ReproduceArgs& a) {
  std::string id;
  ExperimentConfig cfg;
  if (!a.manifest.empty()) {
    auto m = parse_manifest(read_file(a.manifest));
    id = m.figure;
    cfg = std::move(m.config);
    if (!a.figure.empty() && a.figure != id) {
      throw UsageError("figure '" + a.figure + "' does not match manifest '" +
                       id + "'");
    }
  } else {
    if (a.figure.empty()) throw UsageError("a figure id or --manifest is required");
    if (!a.seed) throw UsageError("reproduce requires an explicit --seed");
    id = a.figure;
    cfg = figure_defaults(id, *a.seed);
  }
  if (a.replications) cfg.replications = *a.replications;
  if (a.n) cfg.generator.n = *a.n;
  if (!a.model.empty()) cfg.model = parse_contact_model(a.model);

  const fs::path dir = resolve_out_dir(a.out_dir) / id;
  std::cout << run_figure(id, cfg, dir) << "wrote " << dir.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Confidential-information diffusion on complete, random, "
               "stochastic and scale-free networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "confdiff 1.0.0");

  const std::vector<std::string> families{"complete", "random", "stochastic",
                                          "scale-free"};
  const std::vector<std::string> models{"broadcast", "random-contact",
                                        "uniform-contact"};

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate a network and write its matrix and JSON dump");
  g->add_option("--family", gen.family, "Network family")
      ->required()
      ->check(CLI::IsMember(families));
  g->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  g->add_option("--edge-prob", gen.edge_prob, "Link probability (random family)")
      ->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", gen.seed, "RNG seed (default 1)");
  g->add_option("--out-dir", gen.out_dir, "Output directory (default $CONFDIFF_OUT_DIR or .)");
  g->add_option("--prefix", gen.prefix, "Output file prefix");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run diffusion (single run or Monte Carlo ensemble)");
  s->add_option("--config", sim.config, "INI experiment config; flags override it")
      ->check(CLI::ExistingFile);
  s->add_option("--graph", sim.graph, "Use this graph file instead of generating one")
      ->check(CLI::ExistingFile);
  s->add_option("--family", sim.family, "Network family")->check(CLI::IsMember(families));
  s->add_option("--n", sim.n, "Vertex count")->check(CLI::PositiveNumber);
  s->add_option("--edge-prob", sim.edge_prob, "Link probability (random family)")
      ->check(CLI::Range(0.0, 1.0));
  s->add_option("--graph-seed", sim.graph_seed, "Generator seed");
  s->add_option("--model", sim.model, "Contact model")->check(CLI::IsMember(models));
  s->add_option("--initial", sim.initial, "Initial informed counts (comma list = batch)")
      ->delimiter(',');
  s->add_option("--initial-vertices", sim.initial_vertices,
                "Explicit initially informed vertex ids")
      ->delimiter(',');
  s->add_option("--max-loops", sim.max_loops, "Loop budget")->check(CLI::PositiveNumber);
  s->add_option("--seed", sim.seed, "Simulation seed (default 1)");
  s->add_option("--replications", sim.replications, "Monte Carlo replications")
      ->check(CLI::PositiveNumber);
  s->add_flag("--fixed-graph", sim.fixed_graph, "Reuse one graph for every replication");
  s->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");
  s->add_option("--out-dir", sim.out_dir, "Output directory");

  AnalyzeArgs an;
  auto* z = app.add_subcommand("analyze", "Structural statistics of a graph file");
  z->add_option("--graph", an.graph, "Graph file (matrix text or JSON)");
  z->add_option("--stat", an.stat, "Statistic")
      ->required()
      ->check(CLI::IsMember({"degree-histogram", "power-law", "clustering",
                             "path-length", "matrix-mean", "convergence"}));
  z->add_option("--format", an.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  z->add_option("--out", an.out, "Output file (default stdout)");
  z->add_option("--family", an.family, "Family for --stat convergence")
      ->check(CLI::IsMember(families));
  z->add_option("--sizes", an.sizes, "Sizes for --stat convergence")->delimiter(',');
  z->add_option("--edge-prob", an.edge_prob, "Link probability for --stat convergence")
      ->check(CLI::Range(0.0, 1.0));
  z->add_option("--seed", an.seed, "Seed for --stat convergence");

  ReproduceArgs rp;
  auto* r = app.add_subcommand("reproduce", "Run a canned experiment and write plot-ready data");
  r->add_option("figure", rp.figure, "Figure id")->check(CLI::IsMember(figure_ids()));
  r->add_option("--manifest", rp.manifest, "Replay a manifest.ini")->check(CLI::ExistingFile);
  r->add_option("--seed", rp.seed, "Base seed (required without --manifest)");
  r->add_option("--replications", rp.replications, "Override replication count")
      ->check(CLI::PositiveNumber);
  r->add_option("--n", rp.n, "Override vertex count")->check(CLI::PositiveNumber);
  r->add_option("--model", rp.model, "Override contact model")->check(CLI::IsMember(models));
  r->add_option("--out-dir", rp.out_dir, "Output root (default $CONFDIFF_OUT_DIR or .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*s) return cmd_simulate(sim);
    if (*z) return cmd_analyze(an);
    if (*r) return cmd_reproduce(rp);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
