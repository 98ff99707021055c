#pragma once

#include <stdexcept>
#include <string>

namespace chordsl2 {

// All library errors derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define CHORDSL2_ERROR(Name)                                                   \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

CHORDSL2_ERROR(PreconditionError);
CHORDSL2_ERROR(NonIntegerResult);
CHORDSL2_ERROR(OrderMismatch);
CHORDSL2_ERROR(NonUnitConstantTerm);
CHORDSL2_ERROR(MalformedPairing);
CHORDSL2_ERROR(NotCrossing);
CHORDSL2_ERROR(BadIndex);
CHORDSL2_ERROR(BadRange);
CHORDSL2_ERROR(BoundExceeded);
CHORDSL2_ERROR(DivisibilityViolation);
CHORDSL2_ERROR(NonPositiveCoefficient);
CHORDSL2_ERROR(InsufficientDepth);
CHORDSL2_ERROR(ParseError);

#undef CHORDSL2_ERROR

} // namespace chordsl2
