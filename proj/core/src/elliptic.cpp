#include "etg/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "etg/errors.hpp"

namespace etg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// AGM / Landen iterates are considered converged once they agree to this
// relative precision.
constexpr double kAgmTol = 1e-15;
constexpr double kPoleTol = 1e-9;

void check_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::InvalidModulus, std::string(what) + " must lie in [0, 1], got " +
                                               std::to_string(v));
  }
}

// Bulirsch's descending Landen scheme. u must already be reduced; kc2 = 1 - k^2.
RealJacobi landen_sncndn(double u, double kc2) {
  if (kc2 == 0.0) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }
  std::array<double, 20> em{};
  std::array<double, 20> en{};
  double a = 1.0;
  double emc = kc2;
  double c = 1.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < em.size(); ++i) {
    last = i;
    em[i] = a;
    emc = std::sqrt(emc);
    en[i] = emc;
    c = 0.5 * (a + emc);
    if (std::abs(a - emc) <= kAgmTol * a) break;
    emc *= a;
    a = c;
  }
  u *= c;
  double sn = std::sin(u);
  double cn = std::cos(u);
  double dn = 1.0;
  if (sn != 0.0) {
    a = cn / sn;
    c *= a;
    for (std::size_t ii = last + 1; ii-- > 0;) {
      const double b = em[ii];
      a *= c;
      c *= dn;
      dn = (en[ii] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = sn >= 0.0 ? a : -a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= kAgmTol * a) break;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

// Reduce x into [-period/2, period/2].
double reduce_symmetric(double x, double period) {
  return x - period * std::round(x / period);
}

}  // namespace

Modulus::Modulus(double k2, double kp2)
    : k2_(k2), kp2_(kp2), k_(std::sqrt(k2)), kp_(std::sqrt(kp2)) {}

Modulus Modulus::from_k(double k) {
  check_unit_interval(k, "modulus k");
  return Modulus(k * k, (1.0 - k) * (1.0 + k));
}

Modulus Modulus::from_k2(double k2) {
  check_unit_interval(k2, "squared modulus k^2");
  return Modulus(k2, 1.0 - k2);
}

Modulus Modulus::from_squares(double k2, double kprime2) {
  check_unit_interval(k2, "squared modulus k^2");
  check_unit_interval(kprime2, "squared complementary modulus k'^2");
  if (std::abs(k2 + kprime2 - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidModulus, "k^2 + k'^2 must equal 1");
  }
  return Modulus(k2, kprime2);
}

double complete_K(const Modulus& k) {
  if (k.kprime2() == 0.0) {
    throw Error(ErrorKind::DivergentPeriod, "K(k) diverges at k = 1");
  }
  return std::numbers::pi / (2.0 * agm(1.0, k.kprime()));
}

QuarterPeriods quarter_periods(const Modulus& k) {
  if (k.k2() == 0.0 || k.kprime2() == 0.0) {
    throw Error(ErrorKind::DivergentPeriod, "quarter periods need 0 < k < 1");
  }
  return {complete_K(k), complete_K(k.complement())};
}

RealJacobi jacobi_real(double u, const Modulus& k) {
  if (k.kprime2() == 0.0) return landen_sncndn(u, 0.0);

  const double K = complete_K(k);
  const double r = reduce_symmetric(u, 4.0 * K);
  double t = std::abs(r);
  // sn(2K - t) = sn(t), cn(2K - t) = -cn(t), dn(2K - t) = dn(t)
  const bool reflect = t > K;
  if (reflect) t = 2.0 * K - t;
  RealJacobi j = landen_sncndn(t, k.kprime2());
  if (reflect) j.cn = -j.cn;
  if (r < 0.0) j.sn = -j.sn;
  return j;
}

ComplexJacobi jacobi_complex(std::complex<double> z, const Modulus& k) {
  if (!(k.k2() > 0.0 && k.kprime2() > 0.0)) {
    throw Error(ErrorKind::InvalidModulus, "complex evaluation needs 0 < k < 1");
  }
  const QuarterPeriods p = quarter_periods(k);
  const double u = reduce_symmetric(z.real(), 4.0 * p.K);
  const double v = reduce_symmetric(z.imag(), 4.0 * p.Kprime);

  // Poles of sn, cn, dn: u in {0, +-2K}, v = +-K' after reduction.
  const double du = std::min({std::abs(u), std::abs(u - 2.0 * p.K), std::abs(u + 2.0 * p.K)}) / p.K;
  const double dv = std::min(std::abs(v - p.Kprime), std::abs(v + p.Kprime)) / p.Kprime;
  if (std::hypot(du, dv) < kPoleTol) {
    throw Error(ErrorKind::PoleProximity, "argument is within tolerance of a pole");
  }

  const RealJacobi a = jacobi_real(u, k);
  const RealJacobi b = jacobi_real(v, k.complement());
  // sn(u + iv) etc. from sn(iv, k) = i sc(v, k') and the addition theorem.
  const double den = b.cn * b.cn + k.k2() * a.sn * a.sn * b.sn * b.sn;
  const std::complex<double> sn{a.sn * b.dn / den, a.cn * a.dn * b.sn * b.cn / den};
  const std::complex<double> cn{a.cn * b.cn / den, -a.sn * a.dn * b.sn * b.dn / den};
  const std::complex<double> dn{a.dn * b.cn * b.dn / den, -k.k2() * a.sn * a.cn * b.sn / den};
  return {sn, cn, dn};
}

double ns(double u, const Modulus& k) { return 1.0 / jacobi_real(u, k).sn; }

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0 || (x == 0.0) + (y == 0.0) + (z == 0.0) > 1) {
    throw Error(ErrorKind::OutOfRange, "R_F needs non-negative arguments, at most one zero");
  }
  // Carlson (1995), duplication until the Taylor remainder is below eps.
  static const double tol = std::pow(3.0 * kEps * 0.01, 1.0 / 8.0);
  const double a0 = (x + y + z) / 3.0;
  double an = a0;
  const double q = std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)}) / tol;
  double x0 = x;
  double y0 = y;
  double z0 = z;
  double mul = 1.0;
  while (q >= mul * std::abs(an)) {
    const double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                       std::sqrt(z0) * std::sqrt(x0);
    an = (an + lam) / 4.0;
    x0 = (x0 + lam) / 4.0;
    y0 = (y0 + lam) / 4.0;
    z0 = (z0 + lam) / 4.0;
    mul *= 4.0;
  }
  const double X = (a0 - x) / (mul * an);
  const double Y = (a0 - y) / (mul * an);
  const double Z = -(X + Y);
  const double e2 = X * Y - Z * Z;
  const double e3 = X * Y * Z;
  return (e3 * (6930.0 * e3 + 15015.0 * e2 * e2 - 16380.0 * e2 + 17160.0) +
          e2 * ((10010.0 - 5775.0 * e2) * e2 - 24024.0) + 240240.0) /
         (240240.0 * std::sqrt(an));
}

double elliptic_f(double phi, const Modulus& k) {
  const double m = std::round(phi / std::numbers::pi);
  const double r = phi - m * std::numbers::pi;
  const double s = std::sin(r);
  const double c = std::cos(r);
  if (k.kprime2() == 0.0 && (m != 0.0 || c == 0.0)) {
    throw Error(ErrorKind::DivergentPeriod, "F(phi, 1) diverges at phi = pi/2");
  }
  const double ks = k.k() * s;
  double f = s * carlson_rf(c * c, (1.0 - ks) * (1.0 + ks), 1.0);
  if (m != 0.0) f += 2.0 * m * complete_K(k);
  return f;
}

double arcsn(double s, const Modulus& k) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "arcsn needs s in [0, 1], got " + std::to_string(s));
  }
  if (s == 0.0) return 0.0;
  if (s == 1.0) return complete_K(k);
  const double ks = k.k() * s;
  return s * carlson_rf((1.0 - s) * (1.0 + s), (1.0 - ks) * (1.0 + ks), 1.0);
}

}  // namespace etg
