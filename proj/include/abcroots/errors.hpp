#pragma once

#include <stdexcept>
#include <string>

namespace abcroots {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k is a perfect s-th power, or k/s outside the supported domain.
struct InvalidRootSpec : Error {
    using Error::Error;
};

// Certification of a continued-fraction coefficient failed even after the
// maximum number of precision doublings.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// Factorization gave up within the configured effort budget.  Callers that
// scan many values catch this and flag the record instead of aborting.
struct FactorizationBudgetExceeded : Error {
    using Error::Error;
};

// p^s == k q^s; cannot happen for a valid RootSpec.
struct DegenerateEquation : Error {
    using Error::Error;
};

// The normalized triple failed pairwise coprimality.  Indicates an
// arithmetic bug, never expected on valid inputs.
struct NotCoprime : Error {
    using Error::Error;
};

// The log argument of a gain formula is (at or below) 1.
struct GainUndefined : Error {
    using Error::Error;
};

// p^3 <= L_eps: the explicit-ABC power-gain bound needs a larger index.
struct BoundUndefined : Error {
    using Error::Error;
};

// Filesystem / stream failures while reading or writing result files.
struct IoError : Error {
    using Error::Error;
};

// A result file does not match the expected schema.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace abcroots
