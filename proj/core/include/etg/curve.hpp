#pragma once

#include <vector>

#include "etg/dynamics.hpp"
#include "etg/elliptic.hpp"
#include "etg/vec3.hpp"

namespace etg {

/// Which of the two real components of the base curve a point lies on.
enum class ComponentSign { plus, minus };

constexpr double sign_value(ComponentSign s) noexcept {
  return s == ComponentSign::plus ? 1.0 : -1.0;
}
constexpr ComponentSign flipped(ComponentSign s) noexcept {
  return s == ComponentSign::plus ? ComponentSign::minus : ComponentSign::plus;
}

/// Elliptic coordinates on one component of the base curve.
///
/// Case A: v(u) = (A1 cn u, s A2 sn u, s A3 dn u).
/// Case B: v(u) = (s B1 dn u, s B2 sn u, B3 cn u).
/// Here s = sign_value(component). amp[0] and amp[2] are positive; amp[1] carries
/// the sign of d2, which makes the map advance the phase by +nu on both components.
struct CurveChart {
  CaseLabel label;
  Vec3 amp;
  Modulus k;
  QuarterPeriods periods;
  ComponentSign component;
};

struct Phase {
  double u0;
};

struct ChartedState {
  CurveChart chart;
  Phase phase;
};

/// Chart of the base curve determined by (F, delta) on the given component.
/// Throws RegimeViolation for non-admissible input and BoundaryCase for F2 = 1.
CurveChart make_chart(const ConservedTriple& F, const Delta& delta, ComponentSign component);

/// Recovers the chart and the phase u0 in [-2K, 2K] of a state.
ChartedState chart_from_state(const State& x, const Delta& delta);

/// nu > 0 with sn^2(nu/2) = 1 - F1 (case A) or 1 - 1/F3 (case B).
double elliptic_time_step(const ConservedTriple& F, CaseLabel label, const Modulus& k);

State curve_point(const CurveChart& chart, double u);

/// curve_point(chart, u0 + m nu) for m = 0..n.
std::vector<State> elliptic_solution(const CurveChart& chart, Phase u0, double nu, int n);

/// Reflection onto the other component: (x1, x2, -x3) in case A, (-x1, x2, x3) in case B.
State mirror_state(const State& x, CaseLabel label);

/// The chart of the other component.
CurveChart with_component(CurveChart chart, ComponentSign component);

/// A state together with the elliptic data of its orbit.
struct Orbit {
  Delta delta;
  ConservedTriple F;
  CurveChart chart;
  double u0;
  double nu;

  CaseLabel label() const noexcept { return chart.label; }
  double K() const noexcept { return chart.periods.K; }
};

Orbit orbit_from_state(const State& x, const Delta& delta);

}  // namespace etg
