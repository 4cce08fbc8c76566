#pragma once

#include <filesystem>
#include <vector>

#include "tensemap/archive.hpp"

namespace tensemap::harness {

// One 12x12 fitness grid CSV per yaw bin, named by the bin's degree interval
// (grid_psi_-180_-120.csv, ...). Row r is y-bin r, column c is x-bin c;
// cells hold the elite's fitness to three decimals, empty bins stay empty.
// Returns the emitted paths in yaw-bin order.
std::vector<std::filesystem::path> emit_rotation_grids(
    const Archive& archive, const std::filesystem::path& dir);

// Top-down repertoire map: a CSV of `dx_mm,dy_mm,dpsi_deg,fitness` rows (one
// per elite, stored yaw convention) and an SVG drawing one arrow per elite at
// (dx, dy) in a ±x/y-bound viewport. The rendered arrow orientation uses the
// clockwise-positive display convention.
void emit_topdown_arrows(const Archive& archive,
                         const std::filesystem::path& svg_path,
                         const std::filesystem::path& csv_path);

}  // namespace tensemap::harness
