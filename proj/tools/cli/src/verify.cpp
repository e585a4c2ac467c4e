#include <algorithm>
#include <cmath>
#include <random>

#include "etg/curve.hpp"
#include "etg/involution.hpp"
#include "etg/pencil.hpp"
#include "etg/complex_curve.hpp"
#include "etg_cli/commands.hpp"
#include "json_writer.hpp"

namespace etg::cli {

namespace {

// Interior shifts j/(n+1) * 2K, j = -n..n without 0, used by the involution suites.
std::vector<double> shift_grid(double K, int n) {
  std::vector<double> out;
  for (int j = -n; j <= n; ++j) {
    if (j != 0) out.push_back(2.0 * K * j / (n + 1));
  }
  return out;
}

SuiteResult finish(const RunConfig& c, const char* name, double err, int samples) {
  const double tol = tolerance(c, name);
  return {name, err <= tol, err, tol, samples};
}

SuiteResult conservation(const RunConfig& c, const Delta& delta) {
  const ConservedTriple F0 = conserved(c.x0, delta);
  State x = c.x0;
  double err = 0.0;
  for (int n = 0; n < c.steps; ++n) {
    x = hk_map(x, delta);
    const ConservedTriple F = conserved(x, delta);
    err = std::max({err, std::abs(F.F1 - F0.F1), std::abs(F.F2 - F0.F2), std::abs(F.F3 - F0.F3)});
  }
  return finish(c, "conservation", err, c.steps);
}

SuiteResult involutivity(const RunConfig& c, const Orbit& o) {
  double err = 0.0;
  int samples = 0;
  std::vector<double> grid = shift_grid(o.K(), 8);
  grid.insert(grid.end(), {0.0, 2.0 * o.K(), -2.0 * o.K()});
  for (double nu_i : grid) {
    for (DeltaSign s : {DeltaSign::plus, DeltaSign::minus}) {
      const State y = iota(iota(c.x0, nu_i, s, o), nu_i, s, o);
      err = std::max(err, max_abs_diff(y, c.x0));
      ++samples;
    }
  }
  return finish(c, "involutivity", err, samples);
}

SuiteResult composition(const RunConfig& c, const Orbit& o) {
  const double nu1 = c.nu1.value_or(0.5 * o.nu);
  const std::vector<State> ell = elliptic_solution(o.chart, Phase{o.u0}, o.nu, c.steps);
  State x = c.x0;
  double err = 0.0;
  for (int n = 0; n < c.steps; ++n) {
    const State composed = compose_dEt(x, nu1, o);
    x = hk_map(x, o.delta);
    err = std::max({err, max_abs_diff(composed, x), max_abs_diff(ell[n + 1], x)});
  }
  return finish(c, "composition", err, c.steps);
}

// Four real points whose phases sum to zero across the two components.
SuiteResult coplanarity(const RunConfig& c, const Orbit& o) {
  std::mt19937_64 rng(c.seed.value_or(0));
  std::uniform_real_distribution<double> shift(-2.0 * o.K(), 2.0 * o.K());
  const CurveChart plus = with_component(o.chart, ComponentSign::plus);
  const CurveChart minus = with_component(o.chart, ComponentSign::minus);
  constexpr int kSamples = 32;
  double err = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double nu_i = shift(rng);
    const double ut = shift(rng);
    const double det = coplanarity_det(std::array<Vec3, 4>{
        curve_point(plus, o.u0), curve_point(minus, -o.u0 - nu_i), curve_point(minus, -ut),
        curve_point(plus, ut + nu_i)});
    err = std::max(err, std::abs(det));
  }
  return finish(c, "coplanarity", err, kSamples);
}

// Largest violation of A < 0 (x1), C > 0 (x3), the case-dependent signs of B and
// D, and ABCD >= 0, over the pencil members selected by interior shifts.
SuiteResult sign_lemma(const RunConfig& c, const Orbit& o) {
  const double b_sign = o.label() == CaseLabel::A ? -1.0 : 1.0;
  double err = 0.0;
  int samples = 0;
  for (double nu_i : shift_grid(o.K(), 16)) {
    const InvolutionSpec spec = make_involution_spec(nu_i, DeltaSign::plus, o);
    const DiagonalQuadric& q = spec.H.quadric;
    err = std::max({err, std::max(0.0, q.c1), std::max(0.0, -q.c3), std::max(0.0, -b_sign * q.c2),
                    std::max(0.0, b_sign * q.c0), std::max(0.0, -(q.c1 * q.c2 * q.c3 * q.c0))});
    ++samples;
  }
  return finish(c, "sign_lemma", err, samples);
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

VerifyReport verify(const RunConfig& c) {
  validate(c);
  const Delta delta(c.delta);
  require_admissible(conserved(c.x0, delta), delta);
  const Orbit o = orbit_from_state(c.x0, delta);
  return {{conservation(c, delta), involutivity(c, o), composition(c, o), coplanarity(c, o),
           sign_lemma(c, o)}};
}

std::string report_json(const RunConfig& c, const VerifyReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("config");
  write_config(w, c);
  w.key("pass").value(r.all_pass());
  w.key("suites").begin_array();
  for (const SuiteResult& s : r.suites) {
    w.begin_object();
    w.key("name").value(s.name);
    w.key("pass").value(s.pass);
    w.key("max_error").value(s.max_error);
    w.key("tolerance").value(s.tolerance);
    w.key("samples").value(s.samples);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace etg::cli
