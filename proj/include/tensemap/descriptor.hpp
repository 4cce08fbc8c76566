#pragma once

#include <filesystem>
#include <vector>

#include "tensemap/types.hpp"

namespace tensemap {

// One tracked pose: global-frame planar position (mm) and yaw (degrees).
// z/roll/pitch are ingested from pose streams but unused by the descriptor.
struct PoseSample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;
};

/// Equivalent angle in [-180, 180).
double wrap_angle(double deg);

// Global-frame displacement rotated into the frame the robot had at trial
// start: local = R(-yaw0) * (global_final - global_initial), with R the
// standard counter-clockwise rotation; dpsi = wrap(yaw_final - yaw_initial).
// Throws std::invalid_argument on non-increasing timestamps.
Behavior to_local_behavior(const PoseSample& initial, const PoseSample& final_);

/// Behavior between the first and last sample of a pose stream.
Behavior behavior_from_stream(const std::vector<PoseSample>& stream);

/// Reads `t_s,x_mm,y_mm,z_mm,roll_deg,pitch_deg,yaw_deg` CSV.
std::vector<PoseSample> load_pose_csv(const std::filesystem::path& path);

struct RepeatabilityTrial {
  ParameterSet params;
  double duration_s = 0.0;
  Behavior behavior;
};

// Per-(parameter set, duration) replicate statistics. Yaw uses circular
// statistics: mean via atan2 of summed unit vectors, std over wrapped
// residuals about that mean.
struct GroupStats {
  ParameterSet params;
  double duration_s = 0.0;
  int n = 0;
  double mean_dx = 0.0, mean_dy = 0.0, mean_dpsi = 0.0;
  double std_dx = 0.0, std_dy = 0.0, std_dpsi = 0.0;
};

struct RepeatabilityReport {
  std::vector<GroupStats> groups;  // ordered by (params, duration)
  double suggested_duration_s = 0.0;
  // 2x the maximum per-axis std across parameter sets at the suggested
  // duration.
  double suggested_width_x = 0.0;
  double suggested_width_y = 0.0;
  double suggested_width_psi = 0.0;
};

// Requires at least two replicates per (params, duration) group. The
// suggested duration minimizes the worst normalized std (per-axis stds
// divided by the geometry's half-ranges), ties broken toward shorter.
RepeatabilityReport repeatability_stats(
    const std::vector<RepeatabilityTrial>& trials, const BinGeometry& g = {});

}  // namespace tensemap
