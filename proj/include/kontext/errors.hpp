#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kontext {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Document or structural invariant violations: malformed JSON, duplicate
// atom ids, wrong block size, unknown ids, vectors of the wrong length.
struct ParseError : Error {
    using Error::Error;
};

// Geometric preconditions: dimension mismatch, zero norm, collinear inputs.
struct GeometryError : Error {
    using Error::Error;
};

// Bad arguments against a given diagram: unknown atom, missing coordinates,
// premise values outside {0,1}.
struct ValidationError : Error {
    using Error::Error;
};

// Premises that propagate to an inconsistent block assignment.
struct ContradictionError : Error {
    std::size_t witness_block;

    ContradictionError(const std::string& msg, std::size_t block)
        : Error(msg), witness_block(block) {}
};

} // namespace kontext
