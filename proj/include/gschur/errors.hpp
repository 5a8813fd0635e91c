#pragma once

#include <stdexcept>
#include <string>

namespace gschur {

// Base for every failure the library reports.  The CLI maps the two
// families below onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller asked for something outside the supported domain.
class UsageError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

#define GSCHUR_USAGE_ERROR(Name)      \
  class Name : public UsageError {    \
   public:                            \
    using UsageError::UsageError;     \
  }

#define GSCHUR_INVARIANT_ERROR(Name)  \
  class Name : public InvariantError { \
   public:                            \
    using InvariantError::InvariantError; \
  }

GSCHUR_USAGE_ERROR(SizeMismatch);
GSCHUR_USAGE_ERROR(BoundExceeded);
GSCHUR_USAGE_ERROR(NotRestricted);
GSCHUR_USAGE_ERROR(PreconditionViolation);
GSCHUR_USAGE_ERROR(E2Unsupported);
GSCHUR_USAGE_ERROR(ParseError);

GSCHUR_INVARIANT_ERROR(DivisionByZero);
GSCHUR_INVARIANT_ERROR(DivisionError);
GSCHUR_INVARIANT_ERROR(SingularError);
GSCHUR_INVARIANT_ERROR(SpectrumError);
GSCHUR_INVARIANT_ERROR(NonTermination);
GSCHUR_INVARIANT_ERROR(AlgorithmInvariantError);
GSCHUR_INVARIANT_ERROR(RankError);
GSCHUR_INVARIANT_ERROR(ShapeMismatch);
GSCHUR_INVARIANT_ERROR(BasisError);
GSCHUR_INVARIANT_ERROR(HomogeneityError);
GSCHUR_INVARIANT_ERROR(GradednessError);
GSCHUR_INVARIANT_ERROR(MismatchError);
GSCHUR_INVARIANT_ERROR(SolveError);

#undef GSCHUR_USAGE_ERROR
#undef GSCHUR_INVARIANT_ERROR

}  // namespace gschur
