#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace gallai {

/// Bad argument at an API boundary (out-of-range color, size mismatch, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input data that parses but breaks a semantic rule; the message names the
/// offending edge or field.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text input that cannot be parsed at all. Carries 1-based line/column.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

/// Precondition failure: an operation that requires a Gallai coloring was
/// handed one with a rainbow triangle. Carries the witness triple.
struct NotGallaiError : std::runtime_error {
    std::array<int, 3> triangle;
    explicit NotGallaiError(const std::array<int, 3>& t)
        : std::runtime_error("coloring is not Gallai: rainbow triangle {" +
                             std::to_string(t[0]) + "," + std::to_string(t[1]) +
                             "," + std::to_string(t[2]) + "}"),
          triangle(t) {}
};

/// A stored coloring failed its load-time verification. Hard failure.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal invariant was violated; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gallai
