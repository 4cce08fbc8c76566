#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "tensemap/archive.hpp"
#include "tensemap/bridge/evaluator.hpp"
#include "tensemap/harness/metrics.hpp"
#include "tensemap/sim/simulator.hpp"
#include "tensemap/sim/structure.hpp"

namespace tensemap::harness {

struct ExperimentConfig {
  int n_shared = 100;
  int n_branch = 400;
  std::uint64_t master_seed = 1;
  double mutation_sigma = 16.0;
  BinGeometry geometry;
  bridge::EvaluatorConfig evaluator;
  sim::SimConfig sim;
  sim::StructureSpec structure;  // defaulted by make_default_config()
  std::filesystem::path out_dir = "out";

  void validate() const;
};

ExperimentConfig make_default_config();

// Phase stream seeds derived from the master seed.
struct DerivedSeeds {
  std::uint64_t shared = 0;
  std::uint64_t mutation = 0;
  std::uint64_t control = 0;
  std::uint64_t eval_base = 0;  // per-trial surrogate noise streams
};
DerivedSeeds derive_seeds(std::uint64_t master_seed);

struct ExperimentResult {
  MetricsTable metrics;
  std::size_t shared_bins = 0;
  std::size_t treatment_bins = 0;
  std::size_t control_bins = 0;
  std::filesystem::path out_dir;
};

// The two-branch comparison: one shared random phase, then a mutation branch
// and a random-control branch both continuing from the shared archive
// snapshot. Writes trial logs (trials_{shared,mutation,control}.csv),
// archives, metrics.csv, manifest.json, and plot artifacts under
// cfg.out_dir. With `resume`, completed trials are replayed from the
// persisted logs and the run continues bit-identically.
ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                bool resume = false);

/// Recomputes the metrics table from the trial logs in `dir` alone.
MetricsTable metrics_from_dir(const std::filesystem::path& dir,
                              const BinGeometry& geometry = {});

/// Re-emits plot artifacts from the persisted treatment archive in `dir`.
void plots_from_dir(const std::filesystem::path& dir);

}  // namespace tensemap::harness
