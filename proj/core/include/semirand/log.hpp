#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace semirand {

enum class LogLevel { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3 };

// Level comes from SEMIRAND_LOG (debug|info|warn|error), default warn.
inline LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("SEMIRAND_LOG");
    if (env == nullptr) return LogLevel::kWarn;
    if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
    if (std::strcmp(env, "info") == 0) return LogLevel::kInfo;
    if (std::strcmp(env, "error") == 0) return LogLevel::kError;
    return LogLevel::kWarn;
  }();
  return level;
}

template <typename... Args>
void log_at(LogLevel lvl, const char* tag, const char* fmt, Args... args) {
  if (lvl < log_level()) return;
  std::fprintf(stderr, "[%s] ", tag);
  std::fprintf(stderr, fmt, args...);
  std::fprintf(stderr, "\n");
}

template <typename... Args>
void log_warn(const char* fmt, Args... args) {
  log_at(LogLevel::kWarn, "warn", fmt, args...);
}

template <typename... Args>
void log_info(const char* fmt, Args... args) {
  log_at(LogLevel::kInfo, "info", fmt, args...);
}

inline constexpr const char* kVersion = "0.1.0";

}  // namespace semirand
