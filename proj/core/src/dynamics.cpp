#include "etg/dynamics.hpp"

#include <cmath>
#include <string>

#include "etg/errors.hpp"

namespace etg {

namespace {

constexpr double kDenominatorTol = 1e-13;
constexpr double kBoundaryTol = 1e-10;

DeltaRegime classify_regime(const Vec3& d) {
  if (d[0] == 0.0 && d[1] == 0.0 && d[2] == 0.0) return DeltaRegime::zero;
  if (d[0] < 0.0 && d[1] > 0.0 && d[2] < 0.0) return DeltaRegime::canonical;
  if (d[0] > 0.0 && d[1] < 0.0 && d[2] > 0.0) return DeltaRegime::reversed;
  return DeltaRegime::mixed;
}

double checked_denominator(double den, const char* what) {
  if (!std::isfinite(den) || std::abs(den) < kDenominatorTol) {
    throw Error(ErrorKind::VanishingDenominator, std::string(what) + " vanishes");
  }
  return den;
}

}  // namespace

Delta::Delta(double d1, double d2, double d3) : d_{d1, d2, d3}, regime_(classify_regime(d_)) {}

Delta Delta::from_eps_alpha(double eps, const Vec3& alpha) {
  Delta d(0.5 * eps * alpha);
  d.eps_ = eps;
  d.alpha_ = alpha;
  return d;
}

int Delta::orientation() const noexcept {
  switch (regime_) {
    case DeltaRegime::canonical: return 1;
    case DeltaRegime::reversed: return -1;
    default: return 0;
  }
}

Delta Delta::negated() const {
  Delta d(-d_);
  if (eps_) d.eps_ = -*eps_;
  d.alpha_ = alpha_;
  return d;
}

void Delta::require_regime() const {
  if (regime_ != DeltaRegime::canonical && regime_ != DeltaRegime::reversed) {
    throw Error(ErrorKind::RegimeViolation,
                "delta must have sign pattern (-,+,-) or (+,-,+)");
  }
}

State hk_map(const State& x, const Delta& delta) {
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  const double d1 = delta[0], d2 = delta[1], d3 = delta[2];
  const double a = d2 * d3 * x1 * x1;
  const double b = d1 * d3 * x2 * x2;
  const double c = d1 * d2 * x3 * x3;
  const double den = checked_denominator(1.0 - a - b - c - 2.0 * d1 * d2 * d3 * x1 * x2 * x3,
                                         "map denominator");
  return {(x1 + 2.0 * d1 * x2 * x3 + x1 * (-a + b + c)) / den,
          (x2 + 2.0 * d2 * x3 * x1 + x2 * (a - b + c)) / den,
          (x3 + 2.0 * d3 * x1 * x2 + x3 * (a + b - c)) / den};
}

State hk_inverse(const State& x, const Delta& delta) { return hk_map(x, delta.negated()); }

Vec3 hk_residual(const State& x, const State& xt, const Delta& delta) {
  return {xt[0] - x[0] - delta[0] * (xt[1] * x[2] + x[1] * xt[2]),
          xt[1] - x[1] - delta[1] * (xt[2] * x[0] + x[2] * xt[0]),
          xt[2] - x[2] - delta[2] * (xt[0] * x[1] + x[0] * xt[1])};
}

ConservedTriple conserved(const State& x, const Delta& delta) {
  const double d1 = delta[0], d2 = delta[1], d3 = delta[2];
  const double p1 = 1.0 - d2 * d3 * x[0] * x[0];
  const double p2 = 1.0 - d3 * d1 * x[1] * x[1];
  const double p3 = 1.0 - d1 * d2 * x[2] * x[2];
  checked_denominator(p1, "1 - d2 d3 x1^2");
  checked_denominator(p2, "1 - d3 d1 x2^2");
  checked_denominator(p3, "1 - d1 d2 x3^2");
  return {p2 / p3, p3 / p1, p1 / p2};
}

CaseLabel classify_case(const ConservedTriple& F) {
  if (!(std::abs(F.F2 - 1.0) > kBoundaryTol)) {
    throw Error(ErrorKind::BoundaryCase, "F2 = " + std::to_string(F.F2) + " is too close to 1");
  }
  return F.F2 > 1.0 ? CaseLabel::A : CaseLabel::B;
}

void require_admissible(const ConservedTriple& F, const Delta& delta) {
  delta.require_regime();
  if (!F.admissible()) {
    throw Error(ErrorKind::RegimeViolation, "conserved quantities need F1 in (0,1) and F3 > 1");
  }
}

std::array<DiagonalQuadric, 3> cylinders(const ConservedTriple& F, const Delta& delta) {
  delta.require_regime();
  // Closed bounds so that the origin (F = 1) is accepted.
  if (!(F.F1 > 0.0 && F.F1 <= 1.0 && F.F3 >= 1.0)) {
    throw Error(ErrorKind::RegimeViolation, "conserved quantities need F1 in (0,1] and F3 >= 1");
  }
  const double d1 = delta[0], d2 = delta[1], d3 = delta[2];
  return {DiagonalQuadric{0.0, d1 * d3, -F.F1 * d1 * d2, -(1.0 - F.F1)},
          DiagonalQuadric{-F.F2 * d2 * d3, 0.0, d1 * d2, -(1.0 - F.F2)},
          DiagonalQuadric{d2 * d3, -F.F3 * d1 * d3, 0.0, -(1.0 - F.F3)}};
}

}  // namespace etg
