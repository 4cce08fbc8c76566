#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tensemap/archive.hpp"
#include "tensemap/rng.hpp"
#include "tensemap/trial.hpp"

namespace tensemap {

/// Uniform draw over the full parameter space.
ParameterSet sample_random(Rng& rng);

/// Per-gene rounded Gaussian step with standard deviation `sigma`, clamped
/// into [0, 255].
ParameterSet mutate(const ParameterSet& p, Rng& rng, double sigma = 16.0);

// Anything that can turn a parameter set into a finished trial record
// (the evaluator bridge supplies the gated surrogate/external versions).
class TrialEvaluator {
 public:
  virtual ~TrialEvaluator() = default;
  virtual TrialRecord run_trial(const ParameterSet& params,
                                std::int64_t trial_id, Phase phase) = 0;
};

struct SearchConfig {
  int n_random = 100;
  int n_mutation = 400;
  double mutation_sigma = 16.0;
  std::uint64_t seed = 0;
  std::int64_t first_trial_id = 0;
  int skip_trials = 0;  // already-completed prefix, for resumed runs
  Phase random_phase = Phase::SharedRandom;
  Phase mutation_phase = Phase::Mutation;
};

using TrialSink = std::function<void(const TrialRecord&)>;

// Thrown when an evaluation fails; the failing record has already been
// passed to the sink so the run can be resumed.
class EvaluationAborted : public std::runtime_error {
 public:
  EvaluationAborted(TrialRecord record, const std::string& what)
      : std::runtime_error(what), record(std::move(record)) {}
  TrialRecord record;
};

// Two-phase search: n_random uniform draws, then n_mutation rounds of
// {select elite uniformly, mutate, evaluate, offer}. Every trial is offered
// to the archive (skipped-stationary trials as the null behavior) and handed
// to `sink` before the next trial starts. Trial t of the run draws from the
// fork(seed, t) stream, so a resumed run continues bit-identically.
std::vector<TrialRecord> run_map_elites(const SearchConfig& cfg,
                                        TrialEvaluator& evaluator,
                                        Archive& archive,
                                        const TrialSink& sink = {});

}  // namespace tensemap
