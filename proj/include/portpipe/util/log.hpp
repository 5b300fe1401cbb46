#pragma once

#include <cstdarg>
#include <string>

namespace portpipe::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3 };

// Minimum level comes from PORTPIPE_LOG (debug|info|warn|error), default info.
Level threshold();
void set_threshold(Level level);

void write(Level level, const char* fmt, ...) __attribute__((format(printf, 2, 3)));

#define PORTPIPE_LOG_DEBUG(...) ::portpipe::log::write(::portpipe::log::Level::Debug, __VA_ARGS__)
#define PORTPIPE_LOG_INFO(...) ::portpipe::log::write(::portpipe::log::Level::Info, __VA_ARGS__)
#define PORTPIPE_LOG_WARN(...) ::portpipe::log::write(::portpipe::log::Level::Warn, __VA_ARGS__)
#define PORTPIPE_LOG_ERROR(...) ::portpipe::log::write(::portpipe::log::Level::Error, __VA_ARGS__)

}  // namespace portpipe::log
