#include "etg/errors.hpp"

namespace etg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::DivergentPeriod: return "DivergentPeriod";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::VanishingDenominator: return "VanishingDenominator";
    case ErrorKind::RegimeViolation: return "RegimeViolation";
    case ErrorKind::BoundaryCase: return "BoundaryCase";
    case ErrorKind::AmbiguousPhase: return "AmbiguousPhase";
    case ErrorKind::LambdaInfinite: return "LambdaInfinite";
    case ErrorKind::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorKind::PointOffQuadric: return "PointOffQuadric";
    case ErrorKind::ComplexRulings: return "ComplexRulings";
    case ErrorKind::TangentLine: return "TangentLine";
    case ErrorKind::DegenerateNu: return "DegenerateNu";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace etg
