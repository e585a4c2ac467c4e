#pragma once

#include "etg/dynamics.hpp"
#include "etg/elliptic.hpp"

namespace etg {

enum class QuadricKind { hyperboloid, cone, cylinderC1, cylinderC3 };

/// A member H = C1 + lambda C3 of the pencil through the base curve, written as
/// A x1^2 + B x2^2 + C x3^2 + D = 0.
///
/// lambda = +inf stands for C3 itself. s is the signed root of A B C D whose sign
/// follows the delta regime (positive for (-,+,-)).
struct PencilQuadric {
  double lambda;
  DiagonalQuadric quadric;
  double s;
  QuadricKind kind;
};

/// lambda_i for a phase shift nu_i in [-2K, 2K]. Even in nu_i.
/// Throws LambdaInfinite in case A at nu_i = 0.
double lambda_from_nu(double nu_i, const ConservedTriple& F, CaseLabel label, const Modulus& k);

/// Throws LambdaOutOfRange outside [-(1-F1)/(1-F3), inf] (case A) or
/// [0, -(1-F1)/(1-F3)] (case B).
PencilQuadric pencil_quadric(double lambda, const ConservedTriple& F, const Delta& delta,
                             CaseLabel label);

/// Bilinear pairing of x and y under q; zero iff y is on the polar plane of x.
double tangency_residual(const Vec3& x, const Vec3& y, const DiagonalQuadric& q);

/// Coefficients of c_c cn(u)cn(w) + c_s sn(u)sn(w) + c_d dn(u)dn(w) + c_1 = 0,
/// the pairing of v(u) and v(w) on the other component under C1 + lambda C3 with
/// w = u + nu_i, divided through by the common amplitude factor.
struct FourTermCoefficients {
  double cc;
  double cs;
  double cd;
  double c1;
};

FourTermCoefficients four_term_coefficients(double lambda, const ConservedTriple& F,
                                            CaseLabel label);

/// Left side of the four-term relation at (u0, nu_i).
double four_term_residual(const FourTermCoefficients& c, double u0, double nu_i, const Modulus& k);

/// c_c cn(nu_i) + c_d dn(nu_i) + c_1.
double reduced_residual(const FourTermCoefficients& c, double nu_i, const Modulus& k);

}  // namespace etg
