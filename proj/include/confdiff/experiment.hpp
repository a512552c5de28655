#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "confdiff/diffusion.hpp"
#include "confdiff/error.hpp"
#include "confdiff/generators.hpp"

namespace confdiff {

/// Everything needed to re-run a simulate/reproduce invocation.
///
/// INI layout (all keys optional, unknown keys rejected):
///
///   [generator]   family, n, edge_prob, seed
///   [simulation]  model, initial, initial_vertices, max_loops, seed
///   [ensemble]    replications, regenerate_graph
///   [output]      dir
///
/// `initial` and `initial_vertices` are comma-separated lists. Several
/// `initial` values form a batch with one output per value.
struct ExperimentConfig {
  GeneratorSpec generator;
  /// Empty means "pick from the family": broadcast for complete graphs,
  /// random-contact otherwise.
  std::optional<ContactModel> model;
  std::vector<std::size_t> initial{1};
  std::vector<VertexId> initial_vertices;
  std::size_t max_loops = 1000;
  std::uint64_t seed = 1;
  std::size_t replications = 1;
  bool regenerate_graph = true;
  std::string output_dir;

  ContactModel effective_model() const {
    if (model) return *model;
    return generator.family == Family::complete ? ContactModel::broadcast
                                                : ContactModel::random_contact;
  }

  SimulationConfig simulation(std::size_t initial_count) const {
    SimulationConfig s;
    s.model = effective_model();
    s.initial_informed = initial_count;
    s.max_loops = max_loops;
    s.seed = seed;
    s.initial_vertices = initial_vertices;
    return s;
  }

  void validate() const {
    generator.validate();
    if (initial.empty() && initial_vertices.empty()) {
      throw InputError("at least one initial informed count is required");
    }
    if (replications < 1) throw InputError("replications must be >= 1");
    for (auto k : initial) simulation(k).validate(generator.n);
    if (!initial_vertices.empty()) simulation(1).validate(generator.n);
  }
};

namespace detail {

template <class T>
T parse_number(std::string_view text, std::string_view key) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("bad value '" + std::string(text) + "' for " +
                     std::string(key));
  }
  return value;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <class T>
std::vector<T> parse_list(std::string_view text, std::string_view key) {
  std::vector<T> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_number<T>(trim(text.substr(0, comma)), key));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

inline bool parse_bool(std::string_view text, std::string_view key) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw InputError("bad boolean '" + std::string(text) + "' for " +
                   std::string(key));
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw FormatError(std::string("config: ") + e.message(), e.line());
  }

  ExperimentConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw FormatError("config: key '" + section + "' outside any section");
    }
    for (const auto& [key, node] : body) {
      const std::string value = node.data();
      const std::string name = section + "." + key;
      if (section == "generator") {
        if (key == "family") cfg.generator.family = parse_family(value);
        else if (key == "n") cfg.generator.n = detail::parse_number<std::size_t>(value, name);
        else if (key == "edge_prob") cfg.generator.edge_prob = detail::parse_number<double>(value, name);
        else if (key == "seed") cfg.generator.seed = detail::parse_number<std::uint64_t>(value, name);
        else throw FormatError("config: unknown key " + name);
      } else if (section == "simulation") {
        if (key == "model") cfg.model = parse_contact_model(value);
        else if (key == "initial") cfg.initial = detail::parse_list<std::size_t>(value, name);
        else if (key == "initial_vertices") cfg.initial_vertices = detail::parse_list<VertexId>(value, name);
        else if (key == "max_loops") cfg.max_loops = detail::parse_number<std::size_t>(value, name);
        else if (key == "seed") cfg.seed = detail::parse_number<std::uint64_t>(value, name);
        else throw FormatError("config: unknown key " + name);
      } else if (section == "ensemble") {
        if (key == "replications") cfg.replications = detail::parse_number<std::size_t>(value, name);
        else if (key == "regenerate_graph") cfg.regenerate_graph = detail::parse_bool(value, name);
        else throw FormatError("config: unknown key " + name);
      } else if (section == "output") {
        if (key == "dir") cfg.output_dir = value;
        else throw FormatError("config: unknown key " + name);
      } else if (section != "reproduce") {
        throw FormatError("config: unknown section [" + section + "]");
      }
    }
  }
  return cfg;
}

inline ExperimentConfig parse_experiment_config(const std::string& text) {
  std::istringstream in(text);
  return parse_experiment_config(in);
}

/// Inverse of parse_experiment_config. Keys are always written in the same
/// order so equal configs produce identical text.
inline std::string format_experiment_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "[generator]\n"
      << "family = " << to_string(cfg.generator.family) << '\n'
      << "n = " << cfg.generator.n << '\n';
  if (cfg.generator.edge_prob) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", *cfg.generator.edge_prob);
    out << "edge_prob = " << buf << '\n';
  }
  out << "seed = " << cfg.generator.seed << "\n\n"
      << "[simulation]\n"
      << "model = " << to_string(cfg.effective_model()) << '\n'
      << "initial = " << detail::join(cfg.initial) << '\n';
  if (!cfg.initial_vertices.empty()) {
    out << "initial_vertices = " << detail::join(cfg.initial_vertices) << '\n';
  }
  out << "max_loops = " << cfg.max_loops << '\n'
      << "seed = " << cfg.seed << "\n\n"
      << "[ensemble]\n"
      << "replications = " << cfg.replications << '\n'
      << "regenerate_graph = " << (cfg.regenerate_graph ? "true" : "false")
      << '\n';
  return out.str();
}

}  // namespace confdiff
