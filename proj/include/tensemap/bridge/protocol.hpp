#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "tensemap/types.hpp"

namespace tensemap::bridge {

// Newline-delimited ASCII protocol, one outstanding request at a time:
//   -> EVAL <trial_id> <f1> <f2> <f3> <duration_ms>
//   <- BEH <trial_id> <dx_mm> <dy_mm> <dpsi_deg>     (floats, 3 decimals)
//   <- ERR <trial_id> <code> <message...>
//   -> PING
//   <- PONG
// Behavior values are carried at 0.001 resolution; quantize() is the
// canonical rounding applied before encoding.

class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& what, int remote_code = -1)
      : std::runtime_error(what), remote_code(remote_code) {}
  int remote_code;  // >= 0 when the peer answered with ERR
};

inline constexpr const char* kPing = "PING";
inline constexpr const char* kPong = "PONG";

struct EvalRequest {
  std::int64_t trial_id = 0;
  ParameterSet params;
  int duration_ms = 0;

  bool operator==(const EvalRequest&) const = default;
};

/// Round to the wire resolution (0.001 mm / 0.001 deg).
double quantize(double v);
Behavior quantize(const Behavior& b);

std::string encode_request(const EvalRequest& req);
EvalRequest decode_request(const std::string& line);

std::string encode_response(std::int64_t trial_id, const Behavior& b);
std::string encode_error(std::int64_t trial_id, int code,
                         const std::string& message);

/// Parses a BEH line for `expected_trial_id`; throws ProtocolError on
/// malformed input, trial-id mismatch, or an ERR response (carrying the
/// remote code).
Behavior decode_response(const std::string& line,
                         std::int64_t expected_trial_id);

}  // namespace tensemap::bridge
