#pragma once

#include <cstdint>
#include <string>

#include "tensemap/types.hpp"

namespace tensemap {

enum class Phase { SharedRandom, Mutation, RandomControl };

std::string to_string(Phase phase);
Phase phase_from_string(const std::string& s);

enum class Outcome { Evaluated, SkippedStationary, Error };

std::string to_string(Outcome outcome);
Outcome outcome_from_string(const std::string& s);

// Full provenance of one evaluation.
struct TrialRecord {
  std::int64_t trial_id = 0;
  Phase phase = Phase::SharedRandom;
  ParameterSet params;
  Behavior behavior;  // (0,0,0) for skipped trials
  BinIndex bin;
  double fitness = 0.0;
  Outcome outcome = Outcome::Evaluated;
  std::string message;    // error detail; empty otherwise (not persisted)
  std::string timestamp;  // ISO 8601 UTC, millisecond resolution
};

/// Current wall-clock time as ISO 8601 UTC with milliseconds.
std::string iso8601_now_utc();

}  // namespace tensemap
