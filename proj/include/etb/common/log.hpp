#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace etb::log {

enum class Level { error = 0, info = 1, debug = 2 };

// Level comes from ENGINE_TESTBENCH_LOG in {error, info, debug}; default info.
inline Level threshold() {
    static Level lvl = [] {
        const char* v = std::getenv("ENGINE_TESTBENCH_LOG");
        if (v == nullptr) return Level::info;
        const std::string s(v);
        if (s == "error") return Level::error;
        if (s == "debug") return Level::debug;
        return Level::info;
    }();
    return lvl;
}

template <typename... Args>
void emit(Level lvl, const char* tag, const char* fmt, Args... args) {
    if (lvl > threshold()) return;
    std::fprintf(stderr, "[%s] ", tag);
    std::fprintf(stderr, fmt, args...);
    std::fputc('\n', stderr);
}

template <typename... Args>
void error(const char* fmt, Args... args) { emit(Level::error, "error", fmt, args...); }

template <typename... Args>
void info(const char* fmt, Args... args) { emit(Level::info, "info", fmt, args...); }

template <typename... Args>
void debug(const char* fmt, Args... args) { emit(Level::debug, "debug", fmt, args...); }

}  // namespace etb::log
