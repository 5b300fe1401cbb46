#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace portpipe::net {

struct NetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Owning socket fd. Move-only.
class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  Socket(Socket&& other) noexcept : fd_(other.fd_) { other.fd_ = -1; }
  Socket& operator=(Socket&& other) noexcept;
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  ~Socket();

  int fd() const { return fd_; }
  bool valid() const { return fd_ >= 0; }
  void close();
  // Shuts down both directions; wakes up blocked readers on other threads.
  void shutdown();

 private:
  int fd_ = -1;
};

// Connects with TCP_NODELAY. Throws NetError on failure.
Socket tcp_connect(const std::string& host, uint16_t port);

// Binds and listens; port 0 picks an ephemeral port. Returns socket and actual port.
std::pair<Socket, uint16_t> tcp_listen(const std::string& bind_addr, uint16_t port);

// Blocks in accept(); returns nullopt when the listener was closed.
std::optional<Socket> tcp_accept(const Socket& listener);

// Full-buffer send; throws NetError when the peer is gone.
void send_all(int fd, std::string_view data);

// Reads exactly n bytes; returns false on clean EOF at a message boundary
// (zero bytes read), throws NetError on mid-read EOF or socket error.
bool recv_exact(int fd, char* out, size_t n);

// Waits until fd is readable. Returns false on timeout. timeout_ms < 0 waits forever.
bool wait_readable(int fd, int timeout_ms);

// Binds port 0, records the assigned port, closes. Small race window; callers retry.
uint16_t pick_free_port();

// "host" or "host:port". Defaults to PORTPIPE_BROKER_PORT env or 5680 when no port given.
std::pair<std::string, uint16_t> split_host_port(const std::string& spec);

constexpr uint16_t kDefaultBrokerPort = 5680;
uint16_t default_broker_port();

}  // namespace portpipe::net
