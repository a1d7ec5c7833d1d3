#pragma once

#include <stdexcept>
#include <string>

namespace visicone {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands disagree on ambient dimension.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A construction invariant or argument precondition was violated
/// (degenerate segment, dependent simplex vertices, non-finite coordinate, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

/// A pivot of the symmetric factorization fell below the rank tolerance.
struct NotPositiveDefinite : Error {
  using Error::Error;
};

/// Normal-equation solve failed because the flat's directions are
/// numerically dependent.
struct DegenerateFlat : Error {
  using Error::Error;
};

/// Query point is too far from the affine hull to carry barycentric
/// coordinates.
struct NotInAffineHull : Error {
  using Error::Error;
};

/// A visibility query was made for a candidate point that fails the
/// body-membership precondition.
struct NotInBody : Error {
  using Error::Error;
};

/// Separation was requested for a segment that meets the body.
struct NotDisjoint : Error {
  using Error::Error;
};

/// An active-set or alternating iteration hit its cap.
struct MaxIterationsExceeded : Error {
  using Error::Error;
};

/// The lattice of a grid oracle would exceed its enumeration budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// The Caratheodory subset enumeration would exceed its budget.
struct SubsetBudgetExceeded : Error {
  using Error::Error;
};

/// The requested operation is not defined for this body type.
struct UnsupportedBody : Error {
  using Error::Error;
};

/// Two independent certificate routes disagreed on the same query.
struct CertificateMismatch : Error {
  using Error::Error;
};

}  // namespace visicone
