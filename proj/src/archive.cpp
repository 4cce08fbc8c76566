#include "tensemap/archive.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tensemap {

namespace {

std::string format_elite_row(const BinIndex& bin, const Elite& e) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%d,%d,%d,%d,%d,%d,%.3f,%.3f,%.3f,%.3f,%lld,%s",
                bin.ix, bin.iy, bin.ipsi, e.params.f1, e.params.f2, e.params.f3,
                e.behavior.dx, e.behavior.dy, e.behavior.dpsi, e.fitness,
                static_cast<long long>(e.trial_id), to_string(e.phase).c_str());
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

OfferOutcome Archive::offer(const ParameterSet& params, const Behavior& behavior,
                            std::int64_t trial_id, Phase phase) {
  const BinResult br = bin_index(behavior, geom_);
  const double fit = fitness(behavior, geom_);

  OfferOutcome outcome;
  outcome.bin = br.index;
  outcome.fitness = fit;
  outcome.clamped = br.clamped();

  const int key = flat(br.index);
  auto it = bins_.find(key);
  if (it == bins_.end()) {
    bins_.emplace(key, Elite{params, behavior, fit, trial_id, phase});
    outcome.result = OfferResult::NewBin;
  } else if (fit > it->second.fitness) {  // strict: ties keep the incumbent
    it->second = Elite{params, behavior, fit, trial_id, phase};
    outcome.result = OfferResult::Replaced;
  } else {
    outcome.result = OfferResult::Rejected;
  }
  return outcome;
}

const Elite* Archive::find(const BinIndex& bin) const {
  auto it = bins_.find(flat(bin));
  return it == bins_.end() ? nullptr : &it->second;
}

const Elite& Archive::select_uniform(Rng& rng) const {
  if (bins_.empty()) {
    throw std::runtime_error(
        "select from empty archive: the mutation phase requires at least one "
        "completed random trial");
  }
  const int k = rng.uniform_int(0, static_cast<int>(bins_.size()) - 1);
  auto it = bins_.begin();
  std::advance(it, k);
  return it->second;
}

std::vector<std::pair<BinIndex, Elite>> Archive::entries() const {
  std::vector<std::pair<BinIndex, Elite>> out;
  out.reserve(bins_.size());
  for (const auto& [key, elite] : bins_) {
    const int ipsi = key % geom_.npsi;
    const int iy = (key / geom_.npsi) % geom_.ny;
    const int ix = key / (geom_.npsi * geom_.ny);
    out.emplace_back(BinIndex{ix, iy, ipsi}, elite);
  }
  return out;
}

std::vector<BinIndex> Archive::occupied_bins() const {
  std::vector<BinIndex> out;
  out.reserve(bins_.size());
  for (const auto& entry : entries()) out.push_back(entry.first);
  return out;
}

void Archive::save_csv(std::ostream& out) const {
  out << kCsvHeader << '\n';
  for (const auto& [bin, elite] : entries()) {
    out << format_elite_row(bin, elite) << '\n';
  }
}

void Archive::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write archive: " + path.string());
  save_csv(out);
}

Archive Archive::load_csv(std::istream& in, BinGeometry g) {
  Archive archive(g);
  std::string line;
  if (!std::getline(in, line)) return archive;
  if (line != kCsvHeader) {
    throw std::runtime_error("archive csv: unexpected header: " + line);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 12) {
      throw std::runtime_error("archive csv: bad row: " + line);
    }
    Elite e;
    const BinIndex bin{std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2])};
    e.params = checked_parameters(std::stoi(f[3]), std::stoi(f[4]), std::stoi(f[5]));
    e.behavior = Behavior{std::stod(f[6]), std::stod(f[7]), std::stod(f[8])};
    e.fitness = fitness(e.behavior, g);  // recomputable from the behavior
    if (std::abs(e.fitness - std::stod(f[9])) > 5e-4 + 1e-9) {
      throw std::runtime_error("archive csv: fitness column inconsistent: " + line);
    }
    e.trial_id = std::stoll(f[10]);
    e.phase = phase_from_string(f[11]);
    if (bin_index(e.behavior, g).index != bin) {
      throw std::runtime_error("archive csv: row bin does not match behavior: " + line);
    }
    archive.bins_[archive.flat(bin)] = e;
  }
  return archive;
}

Archive Archive::load_csv(const std::filesystem::path& path, BinGeometry g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read archive: " + path.string());
  return load_csv(in, g);
}

}  // namespace tensemap
