#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "tensemap/rng.hpp"
#include "tensemap/trial.hpp"
#include "tensemap/types.hpp"

namespace tensemap {

// The elite occupying one behavior bin.
struct Elite {
  ParameterSet params;
  Behavior behavior;
  double fitness = 0.0;
  std::int64_t trial_id = -1;
  Phase phase = Phase::SharedRandom;
};

enum class OfferResult { NewBin, Replaced, Rejected };

struct OfferOutcome {
  OfferResult result = OfferResult::Rejected;
  BinIndex bin;
  double fitness = 0.0;
  bool clamped = false;
};

// Grid archive: at most one elite per bin. An offer fills an empty bin or
// replaces the incumbent only on strictly greater fitness; ties keep the
// incumbent.
class Archive {
 public:
  Archive() { geom_.validate(); }
  explicit Archive(BinGeometry g) : geom_(g) { geom_.validate(); }

  const BinGeometry& geometry() const { return geom_; }
  std::size_t occupied() const { return bins_.size(); }
  bool empty() const { return bins_.empty(); }

  OfferOutcome offer(const ParameterSet& params, const Behavior& behavior,
                     std::int64_t trial_id, Phase phase);

  /// Elite in `bin`, or nullptr if the bin is empty.
  const Elite* find(const BinIndex& bin) const;

  /// Uniform choice over occupied bins; throws std::runtime_error when empty.
  const Elite& select_uniform(Rng& rng) const;

  /// Occupied bins with their elites, ascending by (ix, iy, ipsi).
  std::vector<std::pair<BinIndex, Elite>> entries() const;
  std::vector<BinIndex> occupied_bins() const;

  void save_csv(std::ostream& out) const;
  void save_csv(const std::filesystem::path& path) const;
  static Archive load_csv(std::istream& in, BinGeometry g = {});
  static Archive load_csv(const std::filesystem::path& path, BinGeometry g = {});

  static constexpr const char* kCsvHeader =
      "bin_x,bin_y,bin_psi,f1,f2,f3,dx_mm,dy_mm,dpsi_deg,fitness,trial_id,phase";

 private:
  int flat(const BinIndex& b) const {
    return (b.ix * geom_.ny + b.iy) * geom_.npsi + b.ipsi;
  }

  BinGeometry geom_;
  std::map<int, Elite> bins_;  // keyed by flat index => deterministic order
};

}  // namespace tensemap
