#pragma once

#include <stdexcept>
#include <string>

namespace ssgamma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SSGAMMA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

SSGAMMA_DEFINE_ERROR(NegativeValuation)
SSGAMMA_DEFINE_ERROR(PrimeMismatch)
SSGAMMA_DEFINE_ERROR(NonMonomialDivisor)
SSGAMMA_DEFINE_ERROR(ZeroDivisor)
SSGAMMA_DEFINE_ERROR(SingularMatrix)
SSGAMMA_DEFINE_ERROR(BadDimension)
SSGAMMA_DEFINE_ERROR(OrderOverflow)
SSGAMMA_DEFINE_ERROR(NotInIPlus)
SSGAMMA_DEFINE_ERROR(BoundaryNonvanishing)
SSGAMMA_DEFINE_ERROR(Unsupported)
SSGAMMA_DEFINE_ERROR(ZeroDenominator)
SSGAMMA_DEFINE_ERROR(BadRoot)
SSGAMMA_DEFINE_ERROR(ZeroElement)
SSGAMMA_DEFINE_ERROR(UnsupportedElement)
SSGAMMA_DEFINE_ERROR(BadResidueChar)
SSGAMMA_DEFINE_ERROR(InvalidArgument)
SSGAMMA_DEFINE_ERROR(ParseError)

#undef SSGAMMA_DEFINE_ERROR

}  // namespace ssgamma
