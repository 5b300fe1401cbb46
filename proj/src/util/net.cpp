#include "portpipe/util/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>

namespace portpipe::net {

Socket& Socket::operator=(Socket&& other) noexcept {
  if (this != &other) {
    close();
    fd_ = other.fd_;
    other.fd_ = -1;
  }
  return *this;
}

Socket::~Socket() { close(); }

void Socket::close() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

void Socket::shutdown() {
  if (fd_ >= 0) ::shutdown(fd_, SHUT_RDWR);
}

namespace {

void set_nodelay(int fd) {
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

}  // namespace

Socket tcp_connect(const std::string& host, uint16_t port) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  std::string port_str = std::to_string(port);
  int rc = ::getaddrinfo(host.c_str(), port_str.c_str(), &hints, &res);
  if (rc != 0) throw NetError("resolve " + host + ": " + gai_strerror(rc));

  int fd = -1;
  int saved_errno = 0;
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) {
      saved_errno = errno;
      continue;
    }
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    saved_errno = errno;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) {
    throw NetError("connect " + host + ":" + port_str + ": " + std::strerror(saved_errno));
  }
  set_nodelay(fd);
  return Socket(fd);
}

std::pair<Socket, uint16_t> tcp_listen(const std::string& bind_addr, uint16_t port) {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw NetError(std::string("socket: ") + std::strerror(errno));
  int one = 1;
  ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (bind_addr.empty() || bind_addr == "0.0.0.0") {
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
  } else if (::inet_pton(AF_INET, bind_addr.c_str(), &addr.sin_addr) != 1) {
    ::close(fd);
    throw NetError("bad bind address: " + bind_addr);
  }
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    int err = errno;
    ::close(fd);
    throw NetError("bind :" + std::to_string(port) + ": " + std::strerror(err));
  }
  if (::listen(fd, 128) != 0) {
    int err = errno;
    ::close(fd);
    throw NetError(std::string("listen: ") + std::strerror(err));
  }
  sockaddr_in bound{};
  socklen_t len = sizeof(bound);
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&bound), &len);
  return {Socket(fd), ntohs(bound.sin_port)};
}

std::optional<Socket> tcp_accept(const Socket& listener) {
  int fd = ::accept(listener.fd(), nullptr, nullptr);
  if (fd < 0) return std::nullopt;
  set_nodelay(fd);
  return Socket(fd);
}

void send_all(int fd, std::string_view data) {
  size_t sent = 0;
  while (sent < data.size()) {
    ssize_t n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw NetError(std::string("send: ") + std::strerror(errno));
    }
    sent += static_cast<size_t>(n);
  }
}

bool recv_exact(int fd, char* out, size_t n) {
  size_t got = 0;
  while (got < n) {
    ssize_t r = ::recv(fd, out + got, n - got, 0);
    if (r == 0) {
      if (got == 0) return false;
      throw NetError("connection closed mid-frame");
    }
    if (r < 0) {
      if (errno == EINTR) continue;
      throw NetError(std::string("recv: ") + std::strerror(errno));
    }
    got += static_cast<size_t>(r);
  }
  return true;
}

bool wait_readable(int fd, int timeout_ms) {
  pollfd pfd{fd, POLLIN, 0};
  while (true) {
    int rc = ::poll(&pfd, 1, timeout_ms);
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw NetError(std::string("poll: ") + std::strerror(errno));
    }
    return rc > 0;
  }
}

uint16_t pick_free_port() {
  auto [sock, port] = tcp_listen("127.0.0.1", 0);
  return port;
}

uint16_t default_broker_port() {
  if (const char* env = std::getenv("PORTPIPE_BROKER_PORT")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0 && v <= 65535) return static_cast<uint16_t>(v);
  }
  return kDefaultBrokerPort;
}

std::pair<std::string, uint16_t> split_host_port(const std::string& spec) {
  auto pos = spec.rfind(':');
  if (pos == std::string::npos) return {spec, default_broker_port()};
  std::string host = spec.substr(0, pos);
  long port = std::strtol(spec.c_str() + pos + 1, nullptr, 10);
  if (port <= 0 || port > 65535) throw NetError("bad host:port spec: " + spec);
  return {host, static_cast<uint16_t>(port)};
}

}  // namespace portpipe::net
