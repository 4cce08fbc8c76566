#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "tensemap/descriptor.hpp"
#include "tensemap/sim/structure.hpp"
#include "tensemap/types.hpp"

namespace tensemap::sim {

struct SimConfig {
  double timestep_s = 2e-4;
  double duration_s = 10.0;
  double gravity_mm_s2 = 9810.0;
  double ground_stiffness_n_per_mm = 1.2;
  double ground_damping_n_s_per_mm = 1.5e-3;
  double friction_mu = 0.7;
  double friction_vel_eps_mm_s = 10.0;
  // Motor speed per command unit; 255 maps to ~89 Hz.
  double freq_rad_s_per_unit = 2.0 * 3.14159265358979323846 * 0.35;
  double air_damping_per_s = 0.8;
  double settle_time_s = 2.5;
  double settle_damping_per_s = 10.0;
  double noise_mm = 0.0;  // stddev of initial node perturbation; 0 disables
  std::uint64_t seed = 0;
  bool unilateral_springs = false;  // springs go slack under compression
};

struct SimState {
  Eigen::Matrix3Xd pos;  // 3 x n, mm
  Eigen::Matrix3Xd vel;  // 3 x n, mm/s
  double time_s = 0.0;
};

class SimBlowup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Surrogate dynamics: point-mass strut endpoints under gravity, bilateral
// damped springs, penalty-based ground with regularized Coulomb friction,
// rotating-eccentric-mass motor forcing, semi-implicit Euler integration,
// and exact per-strut distance projection (struts share no nodes). Internal
// units are g / mm / s; N/mm-specified stiffnesses are converted on entry.
class Simulator {
 public:
  Simulator(StructureSpec spec, SimConfig cfg);

  const StructureSpec& spec() const { return spec_; }
  const SimConfig& config() const { return cfg_; }

  // Canonical settled rest state: settled under high damping, symmetrized
  // over the 3-fold orbit, lifted so min node z == 0, velocities zeroed.
  const SimState& settled() const { return settled_; }

  /// One fixed timestep with the given per-motor angular speeds (rad/s).
  void step(SimState& state, const std::array<double, 3>& motor_omega) const;

  /// Center-of-mass planar pose; yaw from a planar shape fit against the
  /// settled reference (robust to deformation).
  PoseSample pose_of(const SimState& state) const;

  Behavior evaluate(const ParameterSet& p) const;
  Behavior evaluate(const ParameterSet& p, std::uint64_t trial_seed) const;
  Behavior evaluate(const ParameterSet& p, std::uint64_t trial_seed,
                    double duration_s) const;

  /// Max relative strut-length error of `state` against the spec.
  double max_strut_length_error(const SimState& state) const;

  /// Kinetic + gravitational + elastic (spring and ground) energy, g·mm²/s².
  double mechanical_energy(const SimState& state) const;

  std::array<double, 3> motor_speeds(const ParameterSet& p) const;

 private:
  void accumulate_forces(const SimState& state,
                         const std::array<double, 3>& motor_omega,
                         Eigen::Matrix3Xd& force) const;
  void check_finite(const SimState& state) const;
  SimState build_and_settle() const;

  StructureSpec spec_;
  SimConfig cfg_;
  SymmetryMap symmetry_;
  Eigen::VectorXd mass_;         // g, per node
  SimState settled_;
  Eigen::Matrix2Xd yaw_ref_;     // centered planar settled positions
  double com_z_template_ = 0.0;  // collapse detection reference
};

}  // namespace tensemap::sim
