#pragma once

#include <stdexcept>
#include <string>

namespace bforge {

// Base of every error raised by the library. Verdict-style outcomes
// (no basis, node out of range, ...) are returned as values, not thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// exact-core
class NonExactDivision : public Error { using Error::Error; };
class Inconsistent : public Error { using Error::Error; };

// root-analysis
class ZeroPolynomial : public Error { using Error::Error; };
class NoBracket : public Error { using Error::Error; };

// bernstein-core
class BadExponents : public Error { using Error::Error; };
class BadInterval : public Error { using Error::Error; };
class NotInSpace : public Error { using Error::Error; };
class ConstantNotInSpace : public Error { using Error::Error; };
class NonPositiveScalar : public Error { using Error::Error; };
class NotNonNegative : public Error { using Error::Error; };
class F0NotPositive : public Error { using Error::Error; };

// operator
class RatioNotMonotone : public Error { using Error::Error; };
class DerivedBasisUnavailable : public Error { using Error::Error; };
class IdentityViolation : public Error { using Error::Error; };
class ToleranceTooLoose : public Error { using Error::Error; };
class ArityMismatch : public Error { using Error::Error; };
class OperatorDoesNotExist : public Error { using Error::Error; };

}  // namespace bforge
