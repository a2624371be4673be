#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ctree {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text. Carries 1-based line/column of the offending token.
struct parse_error : error {
    std::size_t line = 0;
    std::size_t col = 0;
    parse_error(const std::string& msg, std::size_t line_, std::size_t col_)
        : error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

// Well-formed syntax, bad meaning: unknown symbol, arity mismatch,
// equality used with equality mode off, and similar.
struct semantic_error : error {
    using error::error;
};

// A bounded enumeration would exceed the configured guard.
struct explosion_error : error {
    std::uint64_t count = 0;
    explosion_error(const std::string& msg, std::uint64_t count_)
        : error(msg + " (would enumerate " + std::to_string(count_) + " items)"), count(count_) {}
};

// An internal consistency check failed; indicates a bug, never user error.
struct internal_error : error {
    using error::error;
};

} // namespace ctree
