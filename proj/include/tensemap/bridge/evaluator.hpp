#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "tensemap/bridge/transport.hpp"
#include "tensemap/search.hpp"
#include "tensemap/sim/simulator.hpp"
#include "tensemap/trial.hpp"

namespace tensemap::bridge {

struct EvaluatorConfig {
  int stationarity_threshold = 90;  // skip when f1+f2+f3 <= threshold
  double trial_duration_s = 10.0;
  double cooldown_s = 4.0;
  std::string backend = "surrogate";  // "surrogate" | "external"
  std::string endpoint;               // host:port or device path

  void validate() const;
};

// Maps a parameter set to a measured behavior.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual Behavior evaluate(const ParameterSet& p, double duration_s,
                            std::uint64_t trial_seed) = 0;
  /// True when trials need cooldown pacing (physical hardware).
  virtual bool serial_resource() const = 0;
  /// Liveness check before a run; throws when unreachable.
  virtual void check_ready() {}
};

// In-process surrogate. Reported behaviors are quantized to the wire
// resolution so that direct and wire-bridged runs log identical values.
class SurrogateBackend : public Backend {
 public:
  SurrogateBackend(sim::StructureSpec spec, sim::SimConfig cfg)
      : sim_(std::move(spec), cfg) {}

  Behavior evaluate(const ParameterSet& p, double duration_s,
                    std::uint64_t trial_seed) override;
  bool serial_resource() const override { return false; }

  const sim::Simulator& simulator() const { return sim_; }

 private:
  sim::Simulator sim_;
};

// Robot (or any external process) reached over the wire protocol. One
// request in flight at a time; response timeout is duration + 15 s.
class ExternalBackend : public Backend {
 public:
  explicit ExternalBackend(std::unique_ptr<LineTransport> transport)
      : transport_(std::move(transport)) {}

  Behavior evaluate(const ParameterSet& p, double duration_s,
                    std::uint64_t trial_seed) override;
  bool serial_resource() const override { return true; }
  void check_ready() override;  // PING -> PONG

  static constexpr std::chrono::milliseconds kTimeoutSlack{15000};

 private:
  std::unique_ptr<LineTransport> transport_;
};

// Applies the stationarity gate, cooldown pacing, and error capture around a
// backend, producing finished trial records for the search loop. Per-trial
// surrogate noise streams derive from `eval_seed_base` and the trial id.
class GatedEvaluator : public TrialEvaluator {
 public:
  GatedEvaluator(EvaluatorConfig cfg, Backend& backend, BinGeometry geometry,
                 std::uint64_t eval_seed_base);

  TrialRecord run_trial(const ParameterSet& params, std::int64_t trial_id,
                        Phase phase) override;

 private:
  EvaluatorConfig cfg_;
  Backend& backend_;
  BinGeometry geometry_;
  std::uint64_t eval_seed_base_;
  std::optional<std::chrono::steady_clock::time_point> last_eval_done_;
};

}  // namespace tensemap::bridge
