#pragma once

#include <stdexcept>
#include <string>

namespace dasep {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DASEP_DEFINE_ERROR(Name)              \
    class Name : public Error {               \
    public:                                   \
        using Error::Error;                   \
    }

DASEP_DEFINE_ERROR(DivisionByZero);
DASEP_DEFINE_ERROR(PoleAtPoint);
DASEP_DEFINE_ERROR(SingularMatrix);
DASEP_DEFINE_ERROR(NotInRootLattice);
DASEP_DEFINE_ERROR(MixedBorelInput);
DASEP_DEFINE_ERROR(SingularAfterExhaustion);
DASEP_DEFINE_ERROR(NotScalar);
DASEP_DEFINE_ERROR(WrongKernelDimension);
DASEP_DEFINE_ERROR(InvalidParams);
DASEP_DEFINE_ERROR(DimensionOverflow);
DASEP_DEFINE_ERROR(NonTerminating);
DASEP_DEFINE_ERROR(DualityViolated);
DASEP_DEFINE_ERROR(NegativeRate);
DASEP_DEFINE_ERROR(ParseError);

#undef DASEP_DEFINE_ERROR

}  // namespace dasep
