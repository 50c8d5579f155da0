#ifndef MILNOR_ERRORS_HPP
#define MILNOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace milnor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator or strand index outside the declared rank.
struct IndexError : Error {
    using Error::Error;
};

// Operands live over different ranks or truncation degrees.
struct MismatchError : Error {
    using Error::Error;
};

// Integer arithmetic left the representable range. Never silently wrapped.
struct OverflowError : Error {
    using Error::Error;
};

// A word expected to be a conjugate of a single generator is not one.
// Signals a non-pure braid or an orientation-convention bug upstream.
struct NotConjugateError : Error {
    using Error::Error;
};

// A coefficient beyond the computed truncation degree was requested.
struct TruncationError : Error {
    using Error::Error;
};

// Exact-word computation exceeded the configured blowup cap; callers
// should fall back to series mode.
struct WordCapError : Error {
    using Error::Error;
};

// Operation applied to a TangleRep of the wrong kind.
struct KindError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace milnor

#endif
