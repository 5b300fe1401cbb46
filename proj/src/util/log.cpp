#include "portpipe/util/log.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <mutex>

namespace portpipe::log {

namespace {

Level level_from_env() {
  const char* env = std::getenv("PORTPIPE_LOG");
  if (env == nullptr) return Level::Info;
  if (std::strcmp(env, "debug") == 0) return Level::Debug;
  if (std::strcmp(env, "warn") == 0) return Level::Warn;
  if (std::strcmp(env, "error") == 0) return Level::Error;
  return Level::Info;
}

std::atomic<Level> g_threshold{level_from_env()};
std::mutex g_mutex;

const char* level_name(Level level) {
  switch (level) {
    case Level::Debug: return "DEBUG";
    case Level::Info: return "INFO";
    case Level::Warn: return "WARN";
    case Level::Error: return "ERROR";
  }
  return "?";
}

}  // namespace

Level threshold() { return g_threshold.load(std::memory_order_relaxed); }

void set_threshold(Level level) { g_threshold.store(level, std::memory_order_relaxed); }

void write(Level level, const char* fmt, ...) {
  if (level < threshold()) return;

  char message[1024];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(message, sizeof(message), fmt, args);
  va_end(args);

  std::timespec ts{};
  std::timespec_get(&ts, TIME_UTC);
  std::tm tm_utc{};
  gmtime_r(&ts.tv_sec, &tm_utc);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%H:%M:%S", &tm_utc);

  std::lock_guard<std::mutex> lock(g_mutex);
  std::fprintf(stderr, "%s.%03ld %-5s %s\n", stamp, ts.tv_nsec / 1000000, level_name(level),
               message);
}

}  // namespace portpipe::log
