#pragma once

#include <cstdarg>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace steallab {

// printf-style helper for error messages and logs.
inline std::string format_str(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    va_list args2;
    va_copy(args2, args);
    int n = std::vsnprintf(nullptr, 0, fmt, args);
    va_end(args);
    std::string out(n > 0 ? static_cast<size_t>(n) : 0, '\0');
    if (n > 0) std::vsnprintf(out.data(), out.size() + 1, fmt, args2);
    va_end(args2);
    return out;
}

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Raised when a training loss turns NaN; carries where it happened.
struct NanAbort : Error {
    explicit NanAbort(const std::string& msg) : Error(msg) {}
};

// Log level comes from STEALLAB_LOG: error|warn|info|debug (default info).
enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_level();
void log_msg(LogLevel lvl, const std::string& msg);

#define STEALLAB_LOG_AT(lvl, ...)                                       \
    do {                                                                \
        if (static_cast<int>(lvl) <= static_cast<int>(::steallab::log_level())) \
            ::steallab::log_msg(lvl, ::steallab::format_str(__VA_ARGS__));      \
    } while (0)

#define LOG_ERROR(...) STEALLAB_LOG_AT(::steallab::LogLevel::Error, __VA_ARGS__)
#define LOG_WARN(...) STEALLAB_LOG_AT(::steallab::LogLevel::Warn, __VA_ARGS__)
#define LOG_INFO(...) STEALLAB_LOG_AT(::steallab::LogLevel::Info, __VA_ARGS__)
#define LOG_DEBUG(...) STEALLAB_LOG_AT(::steallab::LogLevel::Debug, __VA_ARGS__)

}  // namespace steallab
