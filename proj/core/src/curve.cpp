#include "etg/curve.hpp"

#include <cmath>
#include <string>

#include "etg/errors.hpp"

namespace etg {

CurveChart make_chart(const ConservedTriple& F, const Delta& delta, ComponentSign component) {
  require_admissible(F, delta);
  const CaseLabel label = classify_case(F);
  const double d1 = delta[0], d2 = delta[1], d3 = delta[2];
  const double sign2 = d2 > 0.0 ? 1.0 : -1.0;

  double k2 = 0.0;
  double kp2 = 0.0;
  Vec3 amp;
  if (label == CaseLabel::A) {
    k2 = (1.0 - 1.0 / F.F3) / (1.0 - F.F1);
    kp2 = F.F1 * (F.F2 - 1.0) / (1.0 - F.F1);
    amp = {std::sqrt((1.0 - F.F3) / (d2 * d3)), sign2 * std::sqrt((1.0 - 1.0 / F.F3) / (d3 * d1)),
           std::sqrt((1.0 - 1.0 / F.F1) / (d1 * d2))};
  } else {
    k2 = (1.0 - F.F1) / (1.0 - 1.0 / F.F3);
    kp2 = (1.0 - F.F2) / (F.F2 * (F.F3 - 1.0));
    amp = {std::sqrt((1.0 - F.F3) / (d2 * d3)), sign2 * std::sqrt((1.0 - F.F1) / (d1 * d3)),
           std::sqrt((1.0 - 1.0 / F.F1) / (d1 * d2))};
  }
  if (!(k2 > 0.0 && k2 < 1.0 && kp2 > 0.0)) {
    throw Error(ErrorKind::RegimeViolation, "modulus k^2 = " + std::to_string(k2) +
                                                " outside (0, 1)");
  }
  // The two closed forms agree analytically; renormalise away the rounding.
  const double sum = k2 + kp2;
  const Modulus k = Modulus::from_squares(k2 / sum, kp2 / sum);
  return CurveChart{label, amp, k, quarter_periods(k), component};
}

ChartedState chart_from_state(const State& x, const Delta& delta) {
  const ConservedTriple F = conserved(x, delta);
  require_admissible(F, delta);
  const CaseLabel label = classify_case(F);
  const double marker = label == CaseLabel::A ? x[2] : x[0];
  const ComponentSign component = marker < 0.0 ? ComponentSign::minus : ComponentSign::plus;
  const CurveChart chart = make_chart(F, delta, component);

  const double s = sign_value(component);
  const double sn0 = s * x[1] / chart.amp[1];
  const double cn0 = label == CaseLabel::A ? x[0] / chart.amp[0] : x[2] / chart.amp[2];
  // Amplitude phi = am(u0) lies in (-pi, pi], so u0 = F(phi) lies in [-2K, 2K].
  const double u0 = elliptic_f(std::atan2(sn0, cn0), chart.k);
  return {chart, Phase{u0}};
}

double elliptic_time_step(const ConservedTriple& F, CaseLabel label, const Modulus& k) {
  if (!F.admissible()) {
    throw Error(ErrorKind::RegimeViolation, "conserved quantities need F1 in (0,1) and F3 > 1");
  }
  const double s2 = label == CaseLabel::A ? 1.0 - F.F1 : 1.0 - 1.0 / F.F3;
  return 2.0 * arcsn(std::sqrt(s2), k);
}

State curve_point(const CurveChart& chart, double u) {
  const RealJacobi j = jacobi_real(u, chart.k);
  const double s = sign_value(chart.component);
  const Vec3& a = chart.amp;
  if (chart.label == CaseLabel::A) return {a[0] * j.cn, s * a[1] * j.sn, s * a[2] * j.dn};
  return {s * a[0] * j.dn, s * a[1] * j.sn, a[2] * j.cn};
}

std::vector<State> elliptic_solution(const CurveChart& chart, Phase u0, double nu, int n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "step count must be non-negative");
  std::vector<State> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) out.push_back(curve_point(chart, u0.u0 + m * nu));
  return out;
}

State mirror_state(const State& x, CaseLabel label) {
  if (label == CaseLabel::A) return {x[0], x[1], -x[2]};
  return {-x[0], x[1], x[2]};
}

CurveChart with_component(CurveChart chart, ComponentSign component) {
  chart.component = component;
  return chart;
}

Orbit orbit_from_state(const State& x, const Delta& delta) {
  const ChartedState cs = chart_from_state(x, delta);
  const ConservedTriple F = conserved(x, delta);
  const double nu = elliptic_time_step(F, cs.chart.label, cs.chart.k);
  return Orbit{delta, F, cs.chart, cs.phase.u0, nu};
}

}  // namespace etg
