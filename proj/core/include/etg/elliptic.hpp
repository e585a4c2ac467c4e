#pragma once

#include <complex>

namespace etg {

/// Elliptic modulus k in [0, 1] together with its complement k' = sqrt(1 - k^2).
///
/// Both are stored so that callers which know k'^2 in closed form (the curve
/// charts do) can avoid the cancellation in 1 - k^2 near k = 1.
class Modulus {
 public:
  static Modulus from_k(double k);
  /// Takes k^2 and keeps the positive root.
  static Modulus from_k2(double k2);
  /// Takes both squares; they must sum to 1 within a few ulps.
  static Modulus from_squares(double k2, double kprime2);

  double k() const noexcept { return k_; }
  double k2() const noexcept { return k2_; }
  double kprime() const noexcept { return kp_; }
  double kprime2() const noexcept { return kp2_; }

  /// The complementary modulus k'.
  Modulus complement() const noexcept { return Modulus(kp2_, k2_); }

 private:
  Modulus(double k2, double kp2);

  double k2_;
  double kp2_;
  double k_;
  double kp_;
};

template <class T>
struct JacobiTriple {
  T sn;
  T cn;
  T dn;
};

using RealJacobi = JacobiTriple<double>;
using ComplexJacobi = JacobiTriple<std::complex<double>>;

/// Real and imaginary quarter periods K = K(k), K' = K(k').
struct QuarterPeriods {
  double K;
  double Kprime;
};

/// Complete elliptic integral of the first kind by the arithmetic-geometric mean.
/// Throws DivergentPeriod at k = 1.
double complete_K(const Modulus& k);

/// Throws DivergentPeriod for k in {0, 1}, where one of the periods is infinite.
QuarterPeriods quarter_periods(const Modulus& k);

/// sn, cn, dn for real argument. The argument is reduced modulo 4K and folded
/// onto [0, K] before the descending Landen (AGM) evaluation, so
/// sn(-u) = -sn(u), cn(-u) = cn(u) and dn(-u) = dn(u) hold bit for bit.
RealJacobi jacobi_real(double u, const Modulus& k);

/// sn, cn, dn for complex argument via Jacobi's imaginary transformation and the
/// addition theorem. Requires 0 < k < 1. Throws PoleProximity when z lies within
/// 1e-9 (in period-normalised units) of a pole 2mK + (2n+1)iK'.
ComplexJacobi jacobi_complex(std::complex<double> z, const Modulus& k);

/// ns(u) = 1 / sn(u). Infinite at the zeros of sn; callers decide what that means.
double ns(double u, const Modulus& k);

/// Carlson's symmetric integral R_F(x, y, z); at most one argument may be zero.
double carlson_rf(double x, double y, double z);

/// Incomplete integral of the first kind F(phi, k) for any real amplitude phi,
/// using F(phi + m*pi) = F(phi) + 2mK.
double elliptic_f(double phi, const Modulus& k);

/// Inverse of sn on [0, K]: returns u with sn(u, k) = s for s in [0, 1].
double arcsn(double s, const Modulus& k);

}  // namespace etg
