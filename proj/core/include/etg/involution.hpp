#pragma once

#include "etg/curve.hpp"
#include "etg/dynamics.hpp"
#include "etg/pencil.hpp"

namespace etg {

/// Label of a ruling family, matching the sign in front of sqrt(ABCD) in the
/// second component of d.
enum class RulingBranch { plus, minus };

/// Whether an involution is built from +delta or -delta.
enum class DeltaSign { plus, minus };

constexpr double sign_value(DeltaSign s) noexcept { return s == DeltaSign::plus ? 1.0 : -1.0; }
constexpr DeltaSign flipped(DeltaSign s) noexcept {
  return s == DeltaSign::plus ? DeltaSign::minus : DeltaSign::plus;
}

/// Unit direction vectors of the two generating lines through a point.
struct RulingDirections {
  Vec3 plus;
  Vec3 minus;

  const Vec3& operator[](RulingBranch b) const {
    return b == RulingBranch::plus ? plus : minus;
  }
};

/// Raw (unnormalised) direction forms d, d^(1), d^(2) for a given signed root S.
Vec3 ruling_direction_primary(const Vec3& x, const DiagonalQuadric& q, double root);
Vec3 ruling_direction_alt1(const Vec3& x, const DiagonalQuadric& q, double root);
Vec3 ruling_direction_alt2(const Vec3& x, const DiagonalQuadric& q, double root);

/// Throws PointOffQuadric if x is not on q and ComplexRulings if ABCD < 0.
RulingDirections ruling_directions(const Vec3& x, const DiagonalQuadric& q);

struct SecondIntersection {
  double v;
  State point;
};

/// The other intersection of the line x + t d with the cylinder c
/// (alpha x1^2 + beta x3^2 + gamma = 0). Throws TangentLine.
SecondIntersection second_intersection_along(const Vec3& x, const Vec3& d,
                                             const DiagonalQuadric& c);

/// Second intersection along the given ruling of h through x.
SecondIntersection second_intersection(const Vec3& x, const DiagonalQuadric& h,
                                       const DiagonalQuadric& c, RulingBranch branch);

/// x -> x + v(x) d_branch(x).
State iota_generic(const Vec3& x, const DiagonalQuadric& h, const DiagonalQuadric& c,
                   RulingBranch branch);

/// nu_i in [-2K, 2K] \ {0, +-2K} together with the hyperboloid it selects.
struct InvolutionSpec {
  double nu_i;
  DeltaSign delta_sign;
  double lambda;
  PencilQuadric H;
  CaseLabel label;
};

/// Throws DegenerateNu for nu_i in {0, +-2K} and OutOfRange for |nu_i| > 2K.
InvolutionSpec make_involution_spec(double nu_i, DeltaSign sign, const Orbit& orbit);

/// The involution on H_i and C2; the signed root S flips with delta_sign.
State iota_dEt(const State& x, const InvolutionSpec& spec, const ConservedTriple& F,
               const Delta& delta);

struct Composition {
  State intermediate;
  State result;
};

/// Second involution after the first, with the sign rule
///   case A: iota(nu2, -sgn(nu2) delta) o iota(nu1, sgn(nu1) delta)
///   case B: iota(nu2, sgn(nu2) delta) o iota(nu1, -sgn(nu1) delta)
/// where nu2 = nu - nu1. With inverse = true both signs are flipped, which
/// reproduces f(x, -delta). Throws DegenerateNu if nu1 or nu2 is in {0, +-2K}.
Composition compose_dEt_steps(const State& x, double nu1, const Orbit& orbit,
                              bool inverse = false);
State compose_dEt(const State& x, double nu1, const Orbit& orbit, bool inverse = false);

/// The square root of the map: applying it twice gives hk_map. Throws NegativeRadicand.
State sqrt_map(const State& x, const Delta& delta);

enum class DegenerateCase { nu0, nuNu, nu2K, nuNuMinus2K };

/// Closed forms of iota_(nu_i, +-delta) at the degenerate values of nu_i.
State degenerate_map(const State& x, DegenerateCase which, CaseLabel label, DeltaSign sign,
                     const Delta& delta);

/// iota_(nu_i, +-delta) for any nu_i in [-2K, 2K]. The degenerate values 0 and +-2K,
/// recognised within 1e-12 K, go to their closed forms.
State iota(const State& x, double nu_i, DeltaSign sign, const Orbit& orbit);

}  // namespace etg
