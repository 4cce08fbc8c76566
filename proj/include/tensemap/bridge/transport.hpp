#pragma once

#include <chrono>
#include <memory>
#include <stdexcept>
#include <string>

namespace tensemap::bridge {

class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what, bool timed_out = false)
      : std::runtime_error(what), timed_out(timed_out) {}
  bool timed_out;
};

// Blocking line-oriented byte stream; send_line appends the trailing LF.
class LineTransport {
 public:
  virtual ~LineTransport() = default;
  virtual void send_line(const std::string& line) = 0;
  virtual std::string recv_line(std::chrono::milliseconds timeout) = 0;
};

// Works over any stream-like file descriptor: sockets, pipes, ptys, and
// serial devices (configured raw on open).
class FdTransport : public LineTransport {
 public:
  explicit FdTransport(int fd, bool owns = true);
  ~FdTransport() override;
  FdTransport(const FdTransport&) = delete;
  FdTransport& operator=(const FdTransport&) = delete;

  void send_line(const std::string& line) override;
  std::string recv_line(std::chrono::milliseconds timeout) override;

  int fd() const { return fd_; }

 private:
  int fd_;
  bool owns_;
  std::string buffer_;
};

/// Connects to `endpoint`: "host:port" for TCP, otherwise a device path
/// opened raw (115200 8N1 when it is a tty).
std::unique_ptr<LineTransport> open_endpoint(const std::string& endpoint);

}  // namespace tensemap::bridge
