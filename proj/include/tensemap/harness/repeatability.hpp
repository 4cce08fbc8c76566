#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "tensemap/descriptor.hpp"
#include "tensemap/sim/simulator.hpp"
#include "tensemap/sim/structure.hpp"

namespace tensemap::harness {

struct RepeatabilityConfig {
  std::vector<ParameterSet> params;        // typically 15 diverse sets
  std::vector<double> durations_s = {5.0, 10.0, 15.0};
  int replicates_per_duration = 10;
  sim::SimConfig sim;                      // noise_mm should be > 0
  sim::StructureSpec structure;
  BinGeometry geometry;
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = "repeatability_out";
};

/// Reads parameter sets from a `f1,f2,f3` CSV (header optional).
std::vector<ParameterSet> load_params_csv(const std::filesystem::path& path);

// Runs the replicate schedule on the noise-enabled surrogate, writes
// trials.csv (params, duration, behavior per replicate), report.json, and
// groups.csv, and returns the report.
RepeatabilityReport run_repeatability(const RepeatabilityConfig& cfg);

}  // namespace tensemap::harness
