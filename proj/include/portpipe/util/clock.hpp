#pragma once

#include <chrono>
#include <cstdint>

namespace portpipe {

// Wall clock, comparable across processes on one host. Used for genTs/transfTs/detectTs.
inline int64_t now_realtime_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

// Monotonic clock for pacing and timeouts.
inline int64_t now_steady_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace portpipe
