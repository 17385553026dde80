#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace elliskit {

enum class ErrorCode {
  InvalidArgument,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotBijective,
  GroupTooLarge,
  NotNormal,
  UnsupportedParameters,
  NotAnAction,
  OrbitNotDense,
  SizeCapExceeded,
  GroupMismatch,
  IncompatibleTower,
  ClosureCapExceeded,
  NotIdempotent,
  NotInIdeal,
  IsomorphismViolated,
  NotWellDefined,
  NotAPartition,
  NotInvariant,
  NotAWitness,
  NotFree,
  NotEquivalence,
  NotWeaklyGroupLike,
  NotALattice,
  NotAgreeable,
  NotOrbital,
  NotWeaklyOrbital,
  TheoremViolation,
  ParseError,
  ValidationError,
  UnknownExample,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries a code plus a message naming
// the offending elements, triples or points.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace elliskit
