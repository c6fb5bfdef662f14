#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rewire {

// Caller passed arguments that violate an operation's preconditions.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation applied to an object in an incompatible state (stale move,
// cache/graph mismatch, double-added edge, ...).
struct state_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metric has no defined value on this graph (e.g. C(G) with zero wedges).
struct undefined_metric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data; carries the 1-based line number.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, std::size_t line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
    std::size_t line;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rewire
