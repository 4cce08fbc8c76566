#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace tensemap {

// Motor frequency command triple; each entry is a PWM-style byte value.
struct ParameterSet {
  int f1 = 0;
  int f2 = 0;
  int f3 = 0;

  int sum() const { return f1 + f2 + f3; }
  bool operator==(const ParameterSet&) const = default;
};

inline bool valid(const ParameterSet& p) {
  auto ok = [](int f) { return f >= 0 && f <= 255; };
  return ok(p.f1) && ok(p.f2) && ok(p.f3);
}

inline ParameterSet checked_parameters(int f1, int f2, int f3) {
  ParameterSet p{f1, f2, f3};
  if (!valid(p)) {
    throw std::invalid_argument("motor frequency out of [0,255]: (" +
                                std::to_string(f1) + "," + std::to_string(f2) +
                                "," + std::to_string(f3) + ")");
  }
  return p;
}

// Planar displacement (mm) plus yaw change (degrees) over one trial, in the
// robot's local frame at trial start. dpsi uses the half-open [-180, 180)
// convention, counter-clockwise positive seen from above.
struct Behavior {
  double dx = 0.0;
  double dy = 0.0;
  double dpsi = 0.0;

  bool operator==(const Behavior&) const = default;
};

// Uniform grid over the behavior space. Yaw bounds are the full circle and
// are not configurable; x/y bounds and all bin counts are.
struct BinGeometry {
  double x_lo = -360.0;
  double x_hi = 360.0;
  double y_lo = -360.0;
  double y_hi = 360.0;
  double psi_lo = -180.0;
  double psi_hi = 180.0;
  int nx = 12;
  int ny = 12;
  int npsi = 6;

  double x_width() const { return (x_hi - x_lo) / nx; }
  double y_width() const { return (y_hi - y_lo) / ny; }
  double psi_width() const { return (psi_hi - psi_lo) / npsi; }
  int bin_count() const { return nx * ny * npsi; }

  void validate() const {
    if (!(x_hi > x_lo) || !(y_hi > y_lo)) {
      throw std::invalid_argument("bin geometry: bounds must satisfy hi > lo");
    }
    if (psi_lo != -180.0 || psi_hi != 180.0) {
      throw std::invalid_argument("bin geometry: yaw bounds are fixed to [-180, 180)");
    }
    if (nx <= 0 || ny <= 0 || npsi <= 0) {
      throw std::invalid_argument("bin geometry: bin counts must be positive");
    }
  }

  bool operator==(const BinGeometry&) const = default;
};

struct BinIndex {
  int ix = 0;
  int iy = 0;
  int ipsi = 0;

  auto operator<=>(const BinIndex&) const = default;
};

struct BinResult {
  BinIndex index;
  bool clamped_x = false;
  bool clamped_y = false;
  bool clamped_psi = false;

  bool clamped() const { return clamped_x || clamped_y || clamped_psi; }
};

namespace detail {
inline int axis_bin(double v, double lo, double width, int n, bool& clamped) {
  const double t = std::floor((v - lo) / width);
  if (t < 0.0) {
    clamped = true;
    return 0;
  }
  if (t >= static_cast<double>(n)) {
    clamped = true;
    return n - 1;
  }
  return static_cast<int>(t);
}
}  // namespace detail

// Total: every finite behavior maps to a valid bin. Values at or beyond an
// axis's upper bound land in the last bin, values below the lower bound in
// bin 0; both cases are reported through the clamp flags.
inline BinResult bin_index(const Behavior& b, const BinGeometry& g) {
  BinResult r;
  r.index.ix = detail::axis_bin(b.dx, g.x_lo, g.x_width(), g.nx, r.clamped_x);
  r.index.iy = detail::axis_bin(b.dy, g.y_lo, g.y_width(), g.ny, r.clamped_y);
  r.index.ipsi =
      detail::axis_bin(b.dpsi, g.psi_lo, g.psi_width(), g.npsi, r.clamped_psi);
  return r;
}

// Sum of per-axis absolute displacements, each normalized by its half-range;
// in [0, 3] for in-range behaviors.
inline double fitness(const Behavior& b, const BinGeometry& g) {
  const double xh = 0.5 * (g.x_hi - g.x_lo);
  const double yh = 0.5 * (g.y_hi - g.y_lo);
  const double ph = 0.5 * (g.psi_hi - g.psi_lo);
  return std::abs(b.dx) / xh + std::abs(b.dy) / yh + std::abs(b.dpsi) / ph;
}

inline bool in_range(const Behavior& b, const BinGeometry& g) {
  return b.dx >= g.x_lo && b.dx <= g.x_hi && b.dy >= g.y_lo &&
         b.dy <= g.y_hi && b.dpsi >= g.psi_lo && b.dpsi < g.psi_hi;
}

// Nominal [lo, hi) interval of bin i along one axis; the last bin closes its
// upper edge because bound values clamp into it.
struct AxisInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool closed_hi = false;

  bool contains(double v) const {
    return v >= lo && (v < hi || (closed_hi && v <= hi));
  }
};

inline AxisInterval axis_interval(double lo, double width, int n, int i) {
  return AxisInterval{lo + i * width, lo + (i + 1) * width, i == n - 1};
}

inline AxisInterval bin_interval_x(const BinGeometry& g, int ix) {
  return axis_interval(g.x_lo, g.x_width(), g.nx, ix);
}
inline AxisInterval bin_interval_y(const BinGeometry& g, int iy) {
  return axis_interval(g.y_lo, g.y_width(), g.ny, iy);
}
inline AxisInterval bin_interval_psi(const BinGeometry& g, int ipsi) {
  return axis_interval(g.psi_lo, g.psi_width(), g.npsi, ipsi);
}

}  // namespace tensemap
