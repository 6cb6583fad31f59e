#pragma once

#include <stdexcept>
#include <string>

namespace quadpreper {

// Error taxonomy shared by the library and the CLI exit-code contract:
// parse/usage -> 2, resource guard -> 3, I/O -> 4, data integrity -> 5.

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

// N caps, box-size guards and the like.
struct LimitError : std::length_error {
    using std::length_error::length_error;
};

// Exact division with nonzero remainder, non-closed vertex sets, malformed
// graphs: conditions that signal a bug or corrupted input, never user error.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct CuspError : std::domain_error {
    explicit CuspError(const std::string& factor)
        : std::domain_error("cusp condition violated: " + factor + " = 0"),
          violated_factor(factor) {}
    std::string violated_factor;
};

struct OffCurveError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ReductionError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DataIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quadpreper
