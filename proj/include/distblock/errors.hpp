#pragma once

#include <stdexcept>
#include <string>

namespace distblock {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix dimension mismatch (non-square input, inconsistent blocks, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// An operation that requires a nonsingular matrix received a singular one.
struct SingularError : Error {
    using Error::Error;
};

/// Invalid composition, graph description, or generator parameters.
struct InvalidSpecError : Error {
    using Error::Error;
};

/// A closed-form formula does not apply to the given instance
/// (zero cofactor block, lambda = 0, ...).
struct FormulaInapplicableError : Error {
    using Error::Error;
};

}  // namespace distblock
