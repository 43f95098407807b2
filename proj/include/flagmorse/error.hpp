#pragma once

#include <stdexcept>

namespace flagmorse {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedFamily : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };
class HypothesisViolated : public Error { using Error::Error; };
class UnsupportedDelta : public Error { using Error::Error; };
class DegenerateCoefficients : public Error { using Error::Error; };
class NotInK : public Error { using Error::Error; };
class UnknownSuite : public Error { using Error::Error; };
class InvalidArgument : public Error { using Error::Error; };

}  // namespace flagmorse
