#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "tensemap/trial.hpp"

namespace tensemap::io {

inline constexpr const char* kTrialCsvHeader =
    "trial_id,phase,f1,f2,f3,dx_mm,dy_mm,dpsi_deg,bin_x,bin_y,bin_psi,"
    "fitness,outcome,timestamp_iso8601";

std::string trial_csv_row(const TrialRecord& r);
TrialRecord trial_from_csv_row(const std::string& line);

// Append-only trial log; every row is flushed so an aborted run keeps its
// completed trials.
class TrialLogWriter {
 public:
  explicit TrialLogWriter(const std::filesystem::path& path);
  void append(const TrialRecord& r);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

// Loads a trial log. Rows sharing a trial id collapse to the last one (a
// resumed run retries trials that previously errored).
std::vector<TrialRecord> load_trial_log(const std::filesystem::path& path);

}  // namespace tensemap::io
