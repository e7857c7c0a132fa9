#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayleynut {

// Requested parameters violate a feasibility condition of the construction
// being asked for. condition() names the first condition that failed, e.g.
// "4 | d" or "n >= d + 4".
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(std::string condition, const std::string& message)
        : std::runtime_error(message), condition_(std::move(condition)) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

// Exhaustive circulant search was requested above the configured order window.
class WindowExceededError : public std::runtime_error {
public:
    WindowExceededError(int order, int limit)
        : std::runtime_error("order " + std::to_string(order) +
                             " exceeds the circulant search window (limit " +
                             std::to_string(limit) + "); pass an explicit override to proceed"),
          order_(order),
          limit_(limit) {}

    int order() const noexcept { return order_; }
    int limit() const noexcept { return limit_; }

private:
    int order_;
    int limit_;
};

// Malformed graph6 input. offset() is the byte position of the first
// offending (or missing) byte.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + message),
          offset_(offset),
          detail_(message) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t offset_;
    std::string detail_;
};

}  // namespace cayleynut
