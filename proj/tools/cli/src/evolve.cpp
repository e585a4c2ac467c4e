#include <fmt/format.h>

#include "etg/curve.hpp"
#include "etg/errors.hpp"
#include "etg/involution.hpp"
#include "etg_cli/commands.hpp"
#include "json_writer.hpp"

namespace etg::cli {

Trajectory evolve(const RunConfig& c) {
  validate(c);
  const Delta delta(c.delta);
  require_admissible(conserved(c.x0, delta), delta);

  Trajectory t{c.mode, {c.x0}, {}, {}};
  t.states.reserve(static_cast<std::size_t>(c.steps) + 1);
  switch (c.mode) {
    case Mode::map:
      for (int n = 0; n < c.steps; ++n) t.states.push_back(hk_map(t.states.back(), delta));
      break;
    case Mode::sqrt:
      for (int n = 0; n < c.steps; ++n) t.states.push_back(sqrt_map(t.states.back(), delta));
      break;
    case Mode::elliptic: {
      const Orbit o = orbit_from_state(c.x0, delta);
      t.states = elliptic_solution(o.chart, Phase{o.u0}, o.nu, c.steps);
      break;
    }
    case Mode::involutions: {
      // The orbit is rebuilt at every step: holding the hyperboloids of x0 fixed
      // lets round-off move the iterates off the base curve.
      for (int n = 0; n < c.steps; ++n) {
        const Orbit o = orbit_from_state(t.states.back(), delta);
        const Composition step = compose_dEt_steps(t.states.back(), c.nu1.value_or(0.5 * o.nu), o);
        t.intermediates.push_back(step.intermediate);
        t.states.push_back(step.result);
      }
      break;
    }
  }
  t.F.reserve(t.states.size());
  for (const State& x : t.states) t.F.push_back(conserved(x, delta));
  return t;
}

std::string trajectory_csv(const Trajectory& t) {
  std::string out = "n,x1,x2,x3,F1,F2,F3\n";
  for (std::size_t n = 0; n < t.states.size(); ++n) {
    const State& x = t.states[n];
    const ConservedTriple& F = t.F[n];
    out += fmt::format("{},{},{},{},{},{},{}\n", n, format_number(x[0]), format_number(x[1]),
                       format_number(x[2]), format_number(F.F1), format_number(F.F2),
                       format_number(F.F3));
  }
  return out;
}

std::string trajectory_json(const RunConfig& c, const Trajectory& t) {
  JsonWriter w;
  w.begin_object();
  w.key("mode").value(to_string(t.mode));
  w.key("delta").value(c.delta);
  w.key("steps").value(c.steps);
  w.key("states").begin_array();
  for (std::size_t n = 0; n < t.states.size(); ++n) {
    w.begin_object();
    w.key("n").value(static_cast<int>(n));
    w.key("x").value(t.states[n]);
    w.key("F").value(Vec3{t.F[n].F1, t.F[n].F2, t.F[n].F3});
    if (n < t.intermediates.size()) w.key("intermediate").value(t.intermediates[n]);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace etg::cli
