#include "tensemap/trial.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <stdexcept>

namespace tensemap {

std::string to_string(Phase phase) {
  switch (phase) {
    case Phase::SharedRandom: return "shared_random";
    case Phase::Mutation: return "mutation";
    case Phase::RandomControl: return "random_control";
  }
  throw std::logic_error("unknown phase");
}

Phase phase_from_string(const std::string& s) {
  if (s == "shared_random") return Phase::SharedRandom;
  if (s == "mutation") return Phase::Mutation;
  if (s == "random_control") return Phase::RandomControl;
  throw std::invalid_argument("unknown phase: " + s);
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Evaluated: return "Evaluated";
    case Outcome::SkippedStationary: return "SkippedStationary";
    case Outcome::Error: return "Error";
  }
  throw std::logic_error("unknown outcome");
}

Outcome outcome_from_string(const std::string& s) {
  if (s == "Evaluated") return Outcome::Evaluated;
  if (s == "SkippedStationary") return Outcome::SkippedStationary;
  if (s == "Error") return Outcome::Error;
  throw std::invalid_argument("unknown outcome: " + s);
}

std::string iso8601_now_utc() {
  using namespace std::chrono;
  const auto now = system_clock::now();
  const auto ms = duration_cast<milliseconds>(now.time_since_epoch()) % 1000;
  const std::time_t t = system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec, static_cast<int>(ms.count()));
  return buf;
}

}  // namespace tensemap
