#ifndef UNIMOD_ERROR_HPP
#define UNIMOD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace unimod {

enum class ErrorKind {
  DivisionByZero,
  BothZero,
  DegreeZero,
  ZeroPolynomial,
  ZeroDenominator,
  PoleInBall,
  CertificationFailed,
  NotCirclePreserving,
  InternalDisagreement,
  ConstantInput,
  BoundViolation,
  WitnessFitFailed,
  ImagePoint,
  SharedComponentUnresolved,
  BothConstant,
  NotAFactor,
  DependentInputs,
  HorizonTooSmall,
  ZeroInput,
  ParseError,
  NonGaussianCoefficient,
  WrongVariable,
};

const char* to_string(ErrorKind kind);

/// Every library failure is reported through this type; `kind()` is stable
/// and the CLI maps it onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& what)
      : Error(kind, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace unimod

#endif  // UNIMOD_ERROR_HPP
