#ifndef GALREL_ERRORS_HPP
#define GALREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galrel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Constants-field construction rejected the minimal polynomial.
struct FieldError : Error {
    using Error::Error;
};

// Division by zero and friends.
struct ArithmeticError : Error {
    using Error::Error;
};

// A stated theorem hypothesis does not hold for the given input
// (infinite determinant group, unstable ideal, ...).
struct HypothesisError : Error {
    using Error::Error;
};

// Randomized search failed to stabilize; carries the seed for reproduction.
struct SamplingError : Error {
    SamplingError(const std::string& what, unsigned long long seed)
        : Error(what + " (seed " + std::to_string(seed) + ")"), seed(seed) {}
    unsigned long long seed;
};

// A decomposition P = lambda * W^N that invariant theory guarantees could not
// be realized; indicates the premise was only checked on a non-generating set.
struct FmtViolationError : Error {
    using Error::Error;
};

// The supplied invariant generators cannot express the requested element.
struct GeneratorInsufficiencyError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace galrel

#endif
