#pragma once

#include <stdexcept>
#include <string>

namespace oscint {

// All computational failures derive from this; the CLI maps them to exit 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define OSCINT_ERROR(name)                  \
  struct name : Error {                     \
    using Error::Error;                     \
  }

OSCINT_ERROR(PoleProximity);
OSCINT_ERROR(PrecisionInsufficient);
OSCINT_ERROR(OutOfValidityRange);
OSCINT_ERROR(InvalidFrequency);
OSCINT_ERROR(DegenerateDenominator);
OSCINT_ERROR(LeadingCoefficientZero);
OSCINT_ERROR(ConvergenceFailure);
OSCINT_ERROR(SingularOrigin);
OSCINT_ERROR(IllConditionedPair);

#undef OSCINT_ERROR

}  // namespace oscint
