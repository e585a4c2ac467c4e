#include "etg/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "etg/errors.hpp"

namespace etg {

namespace {

constexpr double kRangeTol = 1e-12;

}  // namespace

double lambda_from_nu(double nu_i, const ConservedTriple& F, CaseLabel label, const Modulus& k) {
  const double K = complete_K(k);
  if (!(std::abs(nu_i) <= 2.0 * K * (1.0 + kRangeTol))) {
    throw Error(ErrorKind::OutOfRange, "nu_i must lie in [-2K, 2K]");
  }
  const double sn = jacobi_real(0.5 * nu_i, k).sn;
  const double scale = -(1.0 - F.F1) / (1.0 - F.F3);
  if (label == CaseLabel::B) return scale * sn * sn;
  if (sn == 0.0) {
    throw Error(ErrorKind::LambdaInfinite, "lambda is infinite at nu_i = 0 (H = C3)");
  }
  return scale / (sn * sn);
}

PencilQuadric pencil_quadric(double lambda, const ConservedTriple& F, const Delta& delta,
                             CaseLabel label) {
  delta.require_regime();
  const double d1 = delta[0], d2 = delta[1], d3 = delta[2];
  const double cone = -(1.0 - F.F1) / (1.0 - F.F3);

  if (std::isinf(lambda)) {
    if (label != CaseLabel::A || lambda < 0.0) {
      throw Error(ErrorKind::LambdaOutOfRange, "lambda = +inf only occurs in case A");
    }
    const DiagonalQuadric c3{d2 * d3, -F.F3 * d1 * d3, 0.0, -(1.0 - F.F3)};
    return {lambda, c3, 0.0, QuadricKind::cylinderC3};
  }

  const double tol = kRangeTol * std::max(1.0, std::abs(cone));
  const double lo = label == CaseLabel::A ? cone : 0.0;
  const double hi = label == CaseLabel::A ? std::numeric_limits<double>::infinity() : cone;
  if (!(lambda >= lo - tol && lambda <= hi + tol)) {
    throw Error(ErrorKind::LambdaOutOfRange,
                "lambda = " + std::to_string(lambda) + " outside the range for this case");
  }

  QuadricKind kind = QuadricKind::hyperboloid;
  if (std::abs(lambda - cone) <= tol) {
    lambda = cone;
    kind = QuadricKind::cone;
  } else if (std::abs(lambda) <= tol) {
    lambda = 0.0;
    kind = QuadricKind::cylinderC1;
  }

  DiagonalQuadric q{lambda * d2 * d3, (1.0 - lambda * F.F3) * d1 * d3, -F.F1 * d1 * d2,
                    -(1.0 - F.F1) - lambda * (1.0 - F.F3)};
  if (kind == QuadricKind::cone) q.c0 = 0.0;
  if (kind == QuadricKind::cylinderC1) q.c1 = 0.0;

  const double prod = q.c1 * q.c2 * q.c3 * q.c0;
  const double s = delta.orientation() * std::sqrt(std::max(prod, 0.0));
  return {lambda, q, s, kind};
}

double tangency_residual(const Vec3& x, const Vec3& y, const DiagonalQuadric& q) {
  return q.pairing(x, y);
}

FourTermCoefficients four_term_coefficients(double lambda, const ConservedTriple& F,
                                            CaseLabel label) {
  const double c1 = -(1.0 - F.F1) - lambda * (1.0 - F.F3);
  if (label == CaseLabel::A) {
    return {lambda * (1.0 - F.F3), (1.0 - 1.0 / F.F3) - lambda * (F.F3 - 1.0), -(1.0 - F.F1), c1};
  }
  return {1.0 - F.F1, (1.0 - F.F1) - lambda * F.F3 * (1.0 - F.F1), -lambda * (1.0 - F.F3), c1};
}

double four_term_residual(const FourTermCoefficients& c, double u0, double nu_i,
                          const Modulus& k) {
  const RealJacobi a = jacobi_real(u0, k);
  const RealJacobi b = jacobi_real(u0 + nu_i, k);
  return c.cc * a.cn * b.cn + c.cs * a.sn * b.sn + c.cd * a.dn * b.dn + c.c1;
}

double reduced_residual(const FourTermCoefficients& c, double nu_i, const Modulus& k) {
  const RealJacobi j = jacobi_real(nu_i, k);
  return c.cc * j.cn + c.cd * j.dn + c.c1;
}

}  // namespace etg
