#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etg {

/// Machine-readable failure categories. The CLI prints to_string(kind) verbatim.
enum class ErrorKind {
  InvalidModulus,
  DivergentPeriod,
  PoleProximity,
  OutOfRange,
  VanishingDenominator,
  RegimeViolation,
  BoundaryCase,
  AmbiguousPhase,
  LambdaInfinite,
  LambdaOutOfRange,
  PointOffQuadric,
  ComplexRulings,
  TangentLine,
  DegenerateNu,
  NegativeRadicand,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace etg
