#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

namespace tensemap::sim {

// Rigid rod between two point-mass endpoints.
struct Strut {
  int node_a = 0;
  int node_b = 0;
  double length_mm = 0.0;
  double mass_g = 0.0;  // split evenly between the endpoints
};

struct Spring {
  int node_a = 0;
  int node_b = 0;
  double stiffness_n_per_mm = 0.0;
  double rest_length_mm = 0.0;
  double damping_n_s_per_mm = 0.0;
};

// Rotating-eccentric-mass vibration motor mounted on one strut.
struct Motor {
  int strut = 0;
  double eccentric_mass_g = 0.0;
  double arm_mm = 0.0;
  double phase_rad = 0.0;
};

// Node permutation and exact rotation realizing the structure's 3-fold
// symmetry about the vertical axis, discovered by validate().
struct SymmetryMap {
  std::array<int, 12> node_perm{};       // node i maps to node_perm[i]
  std::array<int, 3> motor_strut_perm{}; // motor k's strut maps to motor .[k]'s
};

struct StructureSpec {
  Eigen::Matrix3Xd nodes;  // 3 x 12 template positions, mm
  std::vector<Strut> struts;
  std::vector<Spring> springs;
  std::vector<Motor> motors;

  // Checks counts (6 struts / 18 springs / 3 motors), spring-graph
  // connectivity, strut lengths against the template, and exact 3-fold
  // rotational symmetry about z (geometry, parameters, and motor placement).
  // Returns the discovered symmetry map.
  SymmetryMap validate() const;

  Eigen::VectorXd node_masses() const;
};

// Six-strut, eighteen-spring template with the three-fold axis vertical and
// motors on the three upper struts.
StructureSpec default_structure();

}  // namespace tensemap::sim
