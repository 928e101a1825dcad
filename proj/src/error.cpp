#include "unimod/error.hpp"

namespace unimod {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::PoleInBall: return "PoleInBall";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::NotCirclePreserving: return "NotCirclePreserving";
    case ErrorKind::InternalDisagreement: return "InternalDisagreement";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::WitnessFitFailed: return "WitnessFitFailed";
    case ErrorKind::ImagePoint: return "ImagePoint";
    case ErrorKind::SharedComponentUnresolved: return "SharedComponentUnresolved";
    case ErrorKind::BothConstant: return "BothConstant";
    case ErrorKind::NotAFactor: return "NotAFactor";
    case ErrorKind::DependentInputs: return "DependentInputs";
    case ErrorKind::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonGaussianCoefficient: return "NonGaussianCoefficient";
    case ErrorKind::WrongVariable: return "WrongVariable";
  }
  return "Unknown";
}

}  // namespace unimod
