#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tensemap/archive.hpp"
#include "tensemap/trial.hpp"

namespace tensemap::harness {

struct SetMetrics {
  std::string name;
  int trials = 0;
  int unique_behaviors = 0;       // bins attributed to this trial set
  double avg_fitness_unique = 0.0;  // mean elite fitness over those bins
  double avg_fitness_all = 0.0;     // mean fitness over every trial in the set
  double coverage = 0.0;            // unique / total bin count
};

struct MetricsTable {
  std::vector<SetMetrics> sets;  // shared, mutation, control, mutation total

  const SetMetrics& by_name(const std::string& name) const;
};

// Pure function of the trial logs. A bin is attributed to the shared set if
// occupied after the shared phase, and to a branch if newly occupied during
// that branch; the mutation-total set owns the treatment archive's bins.
// Elite fitness is read from the archive state at the end of the owning set.
MetricsTable compute_metrics(const std::vector<TrialRecord>& shared,
                             const std::vector<TrialRecord>& mutation,
                             const std::vector<TrialRecord>& control,
                             const BinGeometry& geometry);

/// Replays a trial log's offers (errored rows excluded) onto `archive`.
void replay_offers(const std::vector<TrialRecord>& records, Archive& archive);

std::string metrics_csv(const MetricsTable& table);
std::string metrics_pretty(const MetricsTable& table);
void save_metrics_csv(const MetricsTable& table,
                      const std::filesystem::path& path);
MetricsTable load_metrics_csv(const std::filesystem::path& path);

}  // namespace tensemap::harness
