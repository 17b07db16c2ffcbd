#pragma once

#include <stdexcept>
#include <string>

namespace gbfkg {

/// Base class for library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation requested outside a mode family's domain, or a mode index
/// of the wrong region kind was passed.
struct FamilyDomainError : Error {
    using Error::Error;
};

/// Family does not provide spatial modes.
struct UnsupportedFamilyError : Error {
    using Error::Error;
};

/// Wronskian below the degeneracy floor: X^a, X^b linearly dependent.
struct DegenerateModeError : Error {
    using Error::Error;
};

/// Im(conj(c^a) c^b) vanishes; the vacuum pair does not define a
/// complex structure.
struct DegenerateSpecError : Error {
    using Error::Error;
};

/// A c-component that must be nonzero is zero.
struct ZeroComponentError : Error {
    using Error::Error;
};

/// Upsilon or its tau-derivative vanishes at the requested leaf.
struct ZeroUpsilonError : Error {
    using Error::Error;
};

/// Vacuum positivity -sigma * Im(conj(c^a) c^b) * W > 0 violated.
struct PositivityError : Error {
    using Error::Error;
};

/// Coefficient fields attached to different mode grids were combined.
struct GridMismatchError : Error {
    using Error::Error;
};

/// Scenario configuration could not be parsed or is inconsistent.
struct ConfigError : Error {
    using Error::Error;
};

/// A check id named in the scenario is not registered.
struct UnknownCheckError : ConfigError {
    using ConfigError::ConfigError;
};

}  // namespace gbfkg
