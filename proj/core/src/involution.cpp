#include "etg/involution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "etg/errors.hpp"

namespace etg {

namespace {

constexpr double kOnQuadricTol = 1e-9;
constexpr double kTangentTol = 1e-13;
constexpr double kDegenerateTol = 1e-12;
// Below this fraction of the largest available form the primary direction is
// considered to have collapsed.
constexpr double kCollapseTol = 1e-8;

double quadric_scale(const Vec3& x, const DiagonalQuadric& q) {
  return std::max({std::abs(q.c1 * x[0] * x[0]), std::abs(q.c2 * x[1] * x[1]),
                   std::abs(q.c3 * x[2] * x[2]), std::abs(q.c0)});
}

void require_on_quadric(const Vec3& x, const DiagonalQuadric& q, const char* name) {
  const double r = q.evaluate(x);
  if (!(std::abs(r) <= kOnQuadricTol * std::max(quadric_scale(x, q), 1e-300))) {
    throw Error(ErrorKind::PointOffQuadric,
                std::string("point is not on ") + name + " (residual " + std::to_string(r) + ")");
  }
}

double signed_root(const DiagonalQuadric& q) {
  const double prod = q.c1 * q.c2 * q.c3 * q.c0;
  const double scale = std::abs(q.c1 * q.c2) * std::abs(q.c3 * q.c0);
  if (prod < 0.0 && -prod > 1e-12 * scale) {
    throw Error(ErrorKind::ComplexRulings, "ABCD < 0: the quadric has no real rulings");
  }
  return std::sqrt(std::max(prod, 0.0));
}

Vec3 unit_direction(const Vec3& x, const DiagonalQuadric& q, double root) {
  const Vec3 p = ruling_direction_primary(x, q, root);
  const Vec3 p1 = ruling_direction_alt1(x, q, root);
  const Vec3 p2 = ruling_direction_alt2(x, q, root);
  const double n = norm(p);
  const double n1 = norm(p1);
  const double n2 = norm(p2);
  const double best = std::max({n, n1, n2});
  if (best == 0.0) throw Error(ErrorKind::PointOffQuadric, "no ruling direction at this point");
  if (n >= kCollapseTol * best) return p * (1.0 / n);
  return n1 >= n2 ? p1 * (1.0 / n1) : p2 * (1.0 / n2);
}

DeltaSign sign_of(double v) { return v > 0.0 ? DeltaSign::plus : DeltaSign::minus; }

}  // namespace

Vec3 ruling_direction_primary(const Vec3& x, const DiagonalQuadric& q, double root) {
  const double A = q.c1, B = q.c2, C = q.c3;
  const double abc = A * B * C;
  return {abc * x[0] * x[2] - root * B * x[1], abc * x[1] * x[2] + root * A * x[0],
          -A * B * (A * x[0] * x[0] + B * x[1] * x[1])};
}

Vec3 ruling_direction_alt1(const Vec3& x, const DiagonalQuadric& q, double root) {
  const double A = q.c1, B = q.c2, C = q.c3;
  const double abc = A * B * C;
  return {-B * C * (B * x[1] * x[1] + C * x[2] * x[2]), abc * x[0] * x[1] - root * C * x[2],
          abc * x[0] * x[2] + root * B * x[1]};
}

Vec3 ruling_direction_alt2(const Vec3& x, const DiagonalQuadric& q, double root) {
  const double A = q.c1, B = q.c2, C = q.c3;
  const double abc = A * B * C;
  return {abc * x[0] * x[1] + root * C * x[2], -A * C * (A * x[0] * x[0] + C * x[2] * x[2]),
          abc * x[1] * x[2] - root * A * x[0]};
}

RulingDirections ruling_directions(const Vec3& x, const DiagonalQuadric& q) {
  require_on_quadric(x, q, "the ruled quadric");
  const double root = signed_root(q);
  return {unit_direction(x, q, root), unit_direction(x, q, -root)};
}

SecondIntersection second_intersection_along(const Vec3& x, const Vec3& d,
                                             const DiagonalQuadric& c) {
  if (c.c2 != 0.0) {
    throw Error(ErrorKind::OutOfRange, "the cylinder must not depend on x2");
  }
  const double alpha = c.c1, beta = c.c3;
  const double num = alpha * d[0] * x[0] + beta * d[2] * x[2];
  const double den = alpha * d[0] * d[0] + beta * d[2] * d[2];
  const double scale = std::max(std::abs(alpha), std::abs(beta)) * dot(d, d);
  if (!(std::abs(den) > kTangentTol * scale)) {
    throw Error(ErrorKind::TangentLine, "the line meets the cylinder only at infinity");
  }
  const double v = num == 0.0 ? 0.0 : -2.0 * num / den;
  return {v, x + v * d};
}

SecondIntersection second_intersection(const Vec3& x, const DiagonalQuadric& h,
                                       const DiagonalQuadric& c, RulingBranch branch) {
  require_on_quadric(x, c, "the cylinder");
  const RulingDirections dirs = ruling_directions(x, h);
  return second_intersection_along(x, dirs[branch], c);
}

State iota_generic(const Vec3& x, const DiagonalQuadric& h, const DiagonalQuadric& c,
                   RulingBranch branch) {
  return second_intersection(x, h, c, branch).point;
}

InvolutionSpec make_involution_spec(double nu_i, DeltaSign sign, const Orbit& orbit) {
  const double K = orbit.K();
  const double a = std::abs(nu_i);
  if (!(a <= 2.0 * K * (1.0 + kDegenerateTol))) {
    throw Error(ErrorKind::OutOfRange, "nu_i = " + std::to_string(nu_i) + " outside [-2K, 2K]");
  }
  if (a <= kDegenerateTol * K || std::abs(a - 2.0 * K) <= kDegenerateTol * K) {
    throw Error(ErrorKind::DegenerateNu, "nu_i in {0, +-2K} selects a degenerate quadric");
  }
  const double lambda = lambda_from_nu(nu_i, orbit.F, orbit.label(), orbit.chart.k);
  const PencilQuadric H = pencil_quadric(lambda, orbit.F, orbit.delta, orbit.label());
  if (H.kind != QuadricKind::hyperboloid) {
    throw Error(ErrorKind::DegenerateNu, "nu_i selects a degenerate quadric");
  }
  return {nu_i, sign, lambda, H, orbit.label()};
}

State iota_dEt(const State& x, const InvolutionSpec& spec, const ConservedTriple& F,
               const Delta& delta) {
  const DiagonalQuadric& h = spec.H.quadric;
  const DiagonalQuadric c2 = cylinders(F, delta)[1];
  require_on_quadric(x, h, "H_i");
  require_on_quadric(x, c2, "C2");
  const double root = sign_value(spec.delta_sign) * spec.H.s;
  return second_intersection_along(x, unit_direction(x, h, root), c2).point;
}

Composition compose_dEt_steps(const State& x, double nu1, const Orbit& orbit, bool inverse) {
  const double nu2 = orbit.nu - nu1;
  DeltaSign s1 = sign_of(nu1);
  DeltaSign s2 = sign_of(nu2);
  if (orbit.label() == CaseLabel::A) {
    s2 = flipped(s2);
  } else {
    s1 = flipped(s1);
  }
  if (inverse) {
    s1 = flipped(s1);
    s2 = flipped(s2);
  }
  const InvolutionSpec first = make_involution_spec(nu1, s1, orbit);
  const InvolutionSpec second = make_involution_spec(nu2, s2, orbit);
  const State mid = iota_dEt(x, first, orbit.F, orbit.delta);
  return {mid, iota_dEt(mid, second, orbit.F, orbit.delta)};
}

State compose_dEt(const State& x, double nu1, const Orbit& orbit, bool inverse) {
  return compose_dEt_steps(x, nu1, orbit, inverse).result;
}

State sqrt_map(const State& x, const Delta& delta) {
  const double d1 = delta[0], d2 = delta[1], d3 = delta[2];
  const double r1 = 1.0 - d2 * d3 * x[0] * x[0];
  const double r2 = 1.0 - d1 * d3 * x[1] * x[1];
  const double r3 = 1.0 - d1 * d2 * x[2] * x[2];
  if (!(r1 > 0.0 && r2 > 0.0 && r3 > 0.0)) {
    throw Error(ErrorKind::NegativeRadicand, "1 - d_i d_j x_k^2 must be positive");
  }
  return {(x[0] + d1 * x[1] * x[2]) / std::sqrt(r2 * r3),
          (x[1] + d2 * x[0] * x[2]) / std::sqrt(r1 * r3),
          (x[2] + d3 * x[0] * x[1]) / std::sqrt(r1 * r2)};
}

State degenerate_map(const State& x, DegenerateCase which, CaseLabel label, DeltaSign sign,
                     const Delta& delta) {
  const Delta plus = sign == DeltaSign::plus ? delta : delta.negated();
  const Delta minus = plus.negated();
  switch (which) {
    case DegenerateCase::nu0:
      return mirror_state(x, label);
    case DegenerateCase::nuNu:
      // Case B pairs +delta with f(x, -delta).
      return mirror_state(hk_map(x, label == CaseLabel::A ? plus : minus), label);
    case DegenerateCase::nu2K:
      return -x;
    case DegenerateCase::nuNuMinus2K:
      return -hk_map(x, label == CaseLabel::A ? minus : plus);
  }
  return x;
}

State iota(const State& x, double nu_i, DeltaSign sign, const Orbit& orbit) {
  const double K = orbit.K();
  const double a = std::abs(nu_i);
  if (a <= kDegenerateTol * K) {
    return degenerate_map(x, DegenerateCase::nu0, orbit.label(), sign, orbit.delta);
  }
  if (std::abs(a - 2.0 * K) <= kDegenerateTol * K) {
    return degenerate_map(x, DegenerateCase::nu2K, orbit.label(), sign, orbit.delta);
  }
  return iota_dEt(x, make_involution_spec(nu_i, sign, orbit), orbit.F, orbit.delta);
}

}  // namespace etg
