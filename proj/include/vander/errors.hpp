#ifndef VANDER_ERRORS_HPP
#define VANDER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vander {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic between an exact scalar and a float scalar. Mixing is always a bug
// in the caller, never coerced silently.
struct BackendMismatch : Error {
    explicit BackendMismatch(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Bad argument values: empty node lists, a >= b, duplicate nodes, unknown ids,
// size mismatches. CLI maps this (and ParseError) to exit code 2.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Raised by invert/solve when elimination hits a zero pivot column.
// `stage` is the 1-based elimination stage that failed.
struct SingularMatrix : Error {
    SingularMatrix(const std::string& msg, std::size_t stage_)
        : Error(msg), stage(stage_) {}
    std::size_t stage;
};

// Malformed textual input (CSV, scalar literals). `line` is 1-based, 0 when
// the error is not tied to a particular line.
struct ParseError : Error {
    explicit ParseError(const std::string& msg, std::size_t line_ = 0)
        : Error(msg), line(line_) {}
    std::size_t line;
};

// A consistency check that should hold mathematically failed at runtime
// (e.g. a closed-form cross-check). CLI maps this to exit code 3.
struct CheckFailure : Error {
    explicit CheckFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace vander

#endif
