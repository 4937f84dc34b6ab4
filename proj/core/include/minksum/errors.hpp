#pragma once

#include <stdexcept>
#include <string>

namespace minksum {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical domain was violated (bad element
/// index, malformed partition, point outside the polytope, ...).
struct DomainError : Error {
    using Error::Error;
};

/// The request is well-formed but exceeds a size/enumeration budget.
/// `stage` names the computation that was refused.
struct CapabilityError : Error {
    std::string stage;
    CapabilityError(std::string stage_, const std::string& what_)
        : Error(what_), stage(std::move(stage_)) {}
};

/// The input has the wrong combinatorial structure for the operation
/// (e.g. a choice vector that is not a rep-function of the family).
struct StructureError : Error {
    using Error::Error;
};

/// An invariant the theory guarantees failed to hold; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace minksum
