#include "tensemap/descriptor.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tensemap {

double wrap_angle(double deg) {
  double r = std::fmod(deg + 180.0, 360.0);
  if (r < 0.0) r += 360.0;
  r -= 180.0;
  if (r >= 180.0) r -= 360.0;  // fmod rounding can land exactly on 180
  return r;
}

Behavior to_local_behavior(const PoseSample& initial, const PoseSample& final_) {
  if (!(final_.t > initial.t)) {
    throw std::invalid_argument("to_local_behavior: timestamps must increase");
  }
  const double yaw0 = initial.yaw * std::numbers::pi / 180.0;
  const Eigen::Vector2d global_delta(final_.x - initial.x, final_.y - initial.y);
  const Eigen::Vector2d local = Eigen::Rotation2Dd(-yaw0) * global_delta;
  return Behavior{local.x(), local.y(), wrap_angle(final_.yaw - initial.yaw)};
}

Behavior behavior_from_stream(const std::vector<PoseSample>& stream) {
  if (stream.size() < 2) {
    throw std::invalid_argument("pose stream needs at least two samples");
  }
  return to_local_behavior(stream.front(), stream.back());
}

std::vector<PoseSample> load_pose_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read pose csv: " + path.string());
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("pose csv: empty file: " + path.string());
  }
  if (line != "t_s,x_mm,y_mm,z_mm,roll_deg,pitch_deg,yaw_deg") {
    throw std::runtime_error("pose csv: unexpected header: " + line);
  }
  std::vector<PoseSample> out;
  double prev_t = -1.0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    double v[7];
    for (int i = 0; i < 7; ++i) {
      if (!std::getline(row, field, ',')) {
        throw std::runtime_error("pose csv: short row: " + line);
      }
      v[i] = std::stod(field);
    }
    if (v[0] < 0.0 || v[0] < prev_t) {
      throw std::runtime_error("pose csv: timestamps must be non-negative and "
                               "non-decreasing");
    }
    prev_t = v[0];
    // z, roll, pitch parsed and dropped; the descriptor is planar.
    out.push_back(PoseSample{v[0], v[1], v[2], wrap_angle(v[6])});
  }
  return out;
}

namespace {

struct AxisAccumulator {
  double mean = 0.0;
  double std_dev = 0.0;
};

AxisAccumulator linear_stats(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

// Circular mean via summed unit vectors; std over wrapped residuals. Valid
// while spreads stay well below a half-turn, which bin-repeatability data
// does by construction.
AxisAccumulator circular_stats(const std::vector<double>& degs) {
  const double k = std::numbers::pi / 180.0;
  double s = 0.0, c = 0.0;
  for (double d : degs) {
    s += std::sin(d * k);
    c += std::cos(d * k);
  }
  const double mean = std::atan2(s, c) / k;
  double ss = 0.0;
  for (double d : degs) {
    const double r = wrap_angle(d - mean);
    ss += r * r;
  }
  return {wrap_angle(mean), std::sqrt(ss / (static_cast<double>(degs.size()) - 1.0))};
}

}  // namespace

RepeatabilityReport repeatability_stats(
    const std::vector<RepeatabilityTrial>& trials, const BinGeometry& g) {
  using Key = std::tuple<int, int, int, double>;
  std::map<Key, std::vector<const RepeatabilityTrial*>> groups;
  for (const auto& t : trials) {
    groups[{t.params.f1, t.params.f2, t.params.f3, t.duration_s}].push_back(&t);
  }
  if (groups.empty()) {
    throw std::invalid_argument("repeatability_stats: no trials");
  }

  RepeatabilityReport report;
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) {
      throw std::invalid_argument(
          "repeatability_stats: every (params, duration) group needs at "
          "least two replicates");
    }
    std::vector<double> xs, ys, psis;
    for (const auto* t : members) {
      xs.push_back(t->behavior.dx);
      ys.push_back(t->behavior.dy);
      psis.push_back(t->behavior.dpsi);
    }
    GroupStats gs;
    gs.params = members.front()->params;
    gs.duration_s = std::get<3>(key);
    gs.n = static_cast<int>(members.size());
    const auto ax = linear_stats(xs);
    const auto ay = linear_stats(ys);
    const auto ap = circular_stats(psis);
    gs.mean_dx = ax.mean;
    gs.mean_dy = ay.mean;
    gs.mean_dpsi = ap.mean;
    gs.std_dx = ax.std_dev;
    gs.std_dy = ay.std_dev;
    gs.std_dpsi = ap.std_dev;
    report.groups.push_back(gs);
  }

  // Score each duration by its worst normalized std across groups and axes.
  const double xh = 0.5 * (g.x_hi - g.x_lo);
  const double yh = 0.5 * (g.y_hi - g.y_lo);
  const double ph = 0.5 * (g.psi_hi - g.psi_lo);
  std::map<double, double> duration_score;
  for (const auto& gs : report.groups) {
    const double score = std::max({gs.std_dx / xh, gs.std_dy / yh, gs.std_dpsi / ph});
    auto [it, inserted] = duration_score.try_emplace(gs.duration_s, score);
    if (!inserted) it->second = std::max(it->second, score);
  }
  double best_d = duration_score.begin()->first;
  double best_score = duration_score.begin()->second;
  for (const auto& [d, score] : duration_score) {
    if (score < best_score) {  // map order makes ties resolve to shorter
      best_score = score;
      best_d = d;
    }
  }
  report.suggested_duration_s = best_d;

  for (const auto& gs : report.groups) {
    if (gs.duration_s != best_d) continue;
    report.suggested_width_x = std::max(report.suggested_width_x, 2.0 * gs.std_dx);
    report.suggested_width_y = std::max(report.suggested_width_y, 2.0 * gs.std_dy);
    report.suggested_width_psi =
        std::max(report.suggested_width_psi, 2.0 * gs.std_dpsi);
  }
  return report;
}

}  // namespace tensemap
