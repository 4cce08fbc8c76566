#pragma once

#include <atomic>
#include <cstdint>
#include <functional>

#include "tensemap/bridge/evaluator.hpp"
#include "tensemap/bridge/transport.hpp"

namespace tensemap::bridge {

// Serves the wire protocol over one transport until EOF: answers PING with
// PONG and EVAL with BEH (or ERR on evaluation failure). Returns the number
// of EVAL requests served. Per-trial seeds derive from `seed_base`.
std::size_t serve_connection(LineTransport& transport, Backend& backend,
                             std::uint64_t seed_base);

// Listens on `port` (0 picks a free port, reported through `bound_port`),
// accepts connections one at a time, and serves each until the peer closes.
// Runs until `stop` becomes true (checked between accepts) or, when
// `max_connections` > 0, that many connections have been served.
void run_tcp_server(std::uint16_t port, Backend& backend,
                    std::uint64_t seed_base, std::atomic<bool>& stop,
                    std::function<void(std::uint16_t)> bound_port = {},
                    int max_connections = 0);

}  // namespace tensemap::bridge
