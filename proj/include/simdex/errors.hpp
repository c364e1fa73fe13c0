#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simdex {

// Document-level failure: unterminated math delimiters, malformed figure
// directives, unreadable input. `offset` is a byte position into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Formula-level failure (lexing or parsing one math snippet). The offset is
// relative to the start of the formula payload. Inside a document these are
// caught and recorded on the segment rather than propagated.
class FormulaError : public std::runtime_error {
public:
    FormulaError(std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Bad configuration: malformed rule lines, out-of-range values, unknown keys.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::string message) : std::runtime_error(std::move(message)) {}
};

}  // namespace simdex
