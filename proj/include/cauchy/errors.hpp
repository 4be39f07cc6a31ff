#pragma once

#include <stdexcept>
#include <string>

namespace cauchy {

// Bad caller input (malformed sequences, incompatible pairings, ...).
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration would exceed a caller-supplied size bound.
struct bound_exceeded : std::runtime_error {
    explicit bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant of a bijection run broke; indicates a bug, never
// reachable from valid inputs.
struct corrupted_state : std::logic_error {
    explicit corrupted_state(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line,
                                      const std::string& msg) {
    throw corrupted_state(std::string(file) + ":" + std::to_string(line) +
                          ": check failed: " + expr + (msg.empty() ? "" : " (" + msg + ")"));
}
}  // namespace detail

}  // namespace cauchy

#define CAUCHY_CHECK(expr)                                                  \
    do {                                                                    \
        if (!(expr)) ::cauchy::detail::check_failed(#expr, __FILE__, __LINE__, ""); \
    } while (0)

#define CAUCHY_CHECK_MSG(expr, msg)                                         \
    do {                                                                    \
        if (!(expr)) ::cauchy::detail::check_failed(#expr, __FILE__, __LINE__, (msg)); \
    } while (0)
