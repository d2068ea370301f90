#ifndef CUBESUM_ERRORS_HPP
#define CUBESUM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "cubesum/bigint.hpp"

namespace cubesum {

// Base for every domain failure. "Not a solution" and "trivial solution"
// are deliberately distinct types so callers can tell them apart.
struct CsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroEntry : CsError {
    using CsError::CsError;
};

struct ZeroScale : CsError {
    using CsError::CsError;
};

// Identity fails; carries both sides of the comparison.
struct NotCs : CsError {
    Int cube_sum;
    Int sum_squared;
    NotCs(Int cs, Int sq)
        : CsError("not a CS-set: cube_sum=" + cs.str() + " sum^2=" + sq.str()),
          cube_sum(std::move(cs)),
          sum_squared(std::move(sq)) {}
};

// Identity holds but the set is excluded (contains 0 or a {k,-k} pair).
struct Inadmissible : CsError {
    using CsError::CsError;
};

struct NotDivisible : CsError {
    using CsError::CsError;
};

struct ZeroCubeSum : CsError {
    using CsError::CsError;
};

struct SquareD : CsError {
    using CsError::CsError;
};

struct Exhausted : CsError {
    using CsError::CsError;
};

struct NoExtension : CsError {
    using CsError::CsError;
};

struct NonPositive : CsError {
    using CsError::CsError;
};

struct DegenerateTuple : CsError {
    using CsError::CsError;
};

struct ArityMismatch : CsError {
    using CsError::CsError;
};

struct UnsupportedSize : CsError {
    using CsError::CsError;
};

struct VerificationFailed : CsError {
    using CsError::CsError;
};

// Catalog file parse failure; carries the 1-based line number.
struct CatalogError : CsError {
    std::size_t line;
    CatalogError(std::size_t line_number, const std::string& what)
        : CsError("catalog line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
};

} // namespace cubesum

#endif
