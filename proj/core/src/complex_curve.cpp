#include "etg/complex_curve.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace etg {

namespace {

double reduce_positive(double x, double period) {
  double r = x - period * std::floor(x / period);
  if (r >= period) r -= period;
  if (r < 0.0) r = 0.0;
  return r;
}

}  // namespace

ComplexPhase ComplexPhase::normalized(Complex z, const QuarterPeriods& p) {
  return {Complex(reduce_positive(z.real(), 4.0 * p.K), reduce_positive(z.imag(), 4.0 * p.Kprime))};
}

ComplexPoint phi(Complex z, const CurveChart& chart) {
  const ComplexJacobi j = jacobi_complex(z, chart.k);
  const Vec3& a = chart.amp;
  if (chart.label == CaseLabel::A) return {a[0] * j.cn, a[1] * j.sn, a[2] * j.dn};
  return {a[0] * j.dn, a[1] * j.sn, a[2] * j.cn};
}

Complex PhaseMap::apply(Complex z, const QuarterPeriods& p) const {
  return static_cast<double>(sigma) * z + Complex(m * p.K + shift, n * p.Kprime);
}

PhaseMap PhaseMap::after(const PhaseMap& inner) const {
  return {sigma * inner.sigma, sigma * inner.m + m, sigma * inner.n + n,
          sigma * inner.shift + shift};
}

PhaseMap complex_involution_map(double nu_i, PhaseBranch branch) {
  return {-1, -2, 2, branch == PhaseBranch::plus ? nu_i : -nu_i};
}

ComplexPhase complex_involution(const ComplexPhase& z, double nu_i, PhaseBranch branch,
                                const QuarterPeriods& p) {
  return ComplexPhase::normalized(complex_involution_map(nu_i, branch).apply(z.z, p), p);
}

Complex coplanarity_det(const std::array<Complex, 4>& z, const Modulus& k) {
  Eigen::Matrix4cd m;
  for (int i = 0; i < 4; ++i) {
    const ComplexJacobi j = jacobi_complex(z[static_cast<std::size_t>(i)], k);
    m.row(i) << j.cn, j.sn, j.dn, 1.0;
  }
  return m.determinant();
}

double coplanarity_det(const std::array<Vec3, 4>& points) {
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i) {
    const Vec3& x = points[static_cast<std::size_t>(i)];
    m.row(i) << x[0], x[1], x[2], 1.0;
  }
  return m.determinant();
}

}  // namespace etg
