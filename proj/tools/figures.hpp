#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "confdiff/experiment.hpp"

namespace confdiff::cli {

// Canned desk-scale reproductions. Each figure id maps to a default
// ExperimentConfig; the config actually used is written to manifest.ini next
// to the outputs and `reproduce --manifest` replays it byte-identically.

const std::vector<std::string>& figure_ids();

/// Default configuration for `id` seeded from `seed`. Throws UsageError for
/// unknown ids.
ExperimentConfig figure_defaults(const std::string& id, std::uint64_t seed);

/// Runs figure `id` with `cfg`, writing into `dir`. Returns a short
/// human-readable summary for stdout.
std::string run_figure(const std::string& id, const ExperimentConfig& cfg,
                       const std::filesystem::path& dir);

std::string manifest_text(const std::string& id, const ExperimentConfig& cfg);

struct Manifest {
  std::string figure;
  ExperimentConfig config;
};

Manifest parse_manifest(const std::string& text);

}  // namespace confdiff::cli
