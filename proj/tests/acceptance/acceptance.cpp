// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "etg/complex_curve.hpp"
#include "etg/curve.hpp"
#include "etg/elliptic.hpp"
#include "etg/errors.hpp"
#include "etg/involution.hpp"
#include "etg/pencil.hpp"
#include "sampling.hpp"

namespace {

using namespace etg;
using etg::testing::OrbitSampler;

constexpr CaseLabel kCases[] = {CaseLabel::A, CaseLabel::B};

struct Outcome {
  bool pass;
  std::string detail;
};

// Accumulates the worst error against a bound.
struct Bound {
  double tol;
  double worst = 0.0;
  void add(double e) { worst = std::max(worst, std::isnan(e) ? INFINITY : e); }
  bool ok() const { return worst <= tol; }
  std::string str() const { return fmt::format("max {:.3e} (tol {:.0e})", worst, tol); }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

State start(const Orbit& o) { return curve_point(o.chart, o.u0); }

Outcome conservation() {
  OrbitSampler s(11);
  Bound b{1e-8};
  for (int i = 0; i < 100; ++i) {
    const auto [x0, d] = s.draw(i % 2 ? CaseLabel::A : CaseLabel::B);
    const ConservedTriple F0 = conserved(x0, d);
    State x = x0;
    for (int n = 1; n <= 100; ++n) {
      x = hk_map(x, d);
      const ConservedTriple F = conserved(x, d);
      b.add(std::max({std::abs(F.F1 - F0.F1), std::abs(F.F2 - F0.F2), std::abs(F.F3 - F0.F3)}));
    }
  }
  return {b.ok(), "100 configs x 100 steps, " + b.str()};
}

Outcome elliptic_identities() {
  Bound ident{1e-12};
  for (int j = 1; j <= 9; ++j) {
    const Modulus k = Modulus::from_k(0.1 * j);
    for (int i = 0; i <= 2000; ++i) {
      const double u = -10.0 + 20.0 * i / 2000;
      const RealJacobi t = jacobi_real(u, k);
      ident.add(std::abs(t.sn * t.sn + t.cn * t.cn - 1.0));
      ident.add(std::abs(k.k2() * t.sn * t.sn + t.dn * t.dn - 1.0));
    }
  }
  Bound trip{1e-10};
  for (int j = 1; j <= 9; ++j) {
    const Modulus k = Modulus::from_k(0.1 * j);
    const double K = complete_K(k);
    for (int i = 0; i <= 200; ++i) {
      const double u = K * i / 200;
      trip.add(std::abs(arcsn(jacobi_real(u, k).sn, k) - u));
    }
  }
  const double k0 = std::abs(complete_K(Modulus::from_k(0.0)) - std::numbers::pi / 2);
  return {ident.ok() && trip.ok() && k0 <= 1e-15,
          fmt::format("identities {}, arcsn {}, |K(0)-pi/2| {:.1e}", ident.str(), trip.str(), k0)};
}

Outcome three_representations() {
  OrbitSampler s(33);
  Bound b{1e-8};
  int drawn = 0;
  for (int i = 0; i < 50; ++i) {
    const auto [x0, d] = s.draw(kCases[i % 2]);
    const Orbit o = orbit_from_state(x0, d);
    const std::vector<State> ell = elliptic_solution(o.chart, Phase{o.u0}, o.nu, 50);
    State x = x0;
    State y = x0;
    for (int n = 1; n <= 50; ++n) {
      x = hk_map(x, d);
      const Orbit oy = orbit_from_state(y, d);
      y = compose_dEt(y, 0.5 * oy.nu, oy);
      b.add(max_abs_diff(x, ell[n]));
      b.add(max_abs_diff(x, y));
      b.add(max_abs_diff(y, ell[n]));
    }
    ++drawn;
  }
  return {b.ok() && drawn == 50, fmt::format("{} configs x 50 steps, pairwise {}", drawn, b.str())};
}

// A random one-sheeted hyperboloid with a point on it and a cylinder through that point.
struct GenericInstance {
  DiagonalQuadric h;
  DiagonalQuadric c;
  Vec3 x;
};

GenericInstance random_instance(OrbitSampler& s) {
  const DiagonalQuadric h{s.uniform(0.5, 2.0), s.uniform(0.5, 2.0), -s.uniform(0.5, 2.0),
                          -s.uniform(0.5, 2.0)};
  const double t = s.uniform(-3.0, 3.0);
  const double p = s.uniform(0.0, 2.0 * std::numbers::pi);
  const double r = -h.c0 - h.c3 * t * t;
  const Vec3 x{std::sqrt(r / h.c1) * std::cos(p), std::sqrt(r / h.c2) * std::sin(p), t};
  const double alpha = s.uniform(-2.0, -0.5);
  const double beta = s.uniform(0.5, 2.0);
  return {h, {alpha, 0.0, beta, -(alpha * x[0] * x[0] + beta * x[2] * x[2])}, x};
}

Outcome involutivity() {
  OrbitSampler s(44);
  Bound generic{1e-9};
  int checked = 0;
  while (checked < 100) {
    const GenericInstance g = random_instance(s);
    for (const RulingBranch br : {RulingBranch::plus, RulingBranch::minus}) {
      State y;
      try {
        y = iota_generic(g.x, g.h, g.c, br);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TangentLine) throw;
        continue;
      }
      if (max_abs(y) > 1e3) continue;
      generic.add(max_abs_diff(iota_generic(y, g.h, g.c, br), g.x) / std::max(1.0, max_abs(y)));
      ++checked;
    }
  }
  Bound det{1e-9};
  Bound degenerate{1e-9};
  bool exact = true;
  for (const CaseLabel c : kCases) {
    for (int i = 0; i < 5; ++i) {
      const auto [x0, d] = s.draw(c);
      const Orbit o = orbit_from_state(x0, d);
      const State x = start(o);
      for (int j = 0; j < 20; ++j) {
        const double nu_i = (-2.0 + 4.0 * (j + 0.5) / 20) * o.K();
        for (const DeltaSign sg : {DeltaSign::plus, DeltaSign::minus}) {
          const InvolutionSpec spec = make_involution_spec(nu_i, sg, o);
          det.add(max_abs_diff(iota_dEt(iota_dEt(x, spec, o.F, d), spec, o.F, d), x));
        }
      }
      for (const DeltaSign sg : {DeltaSign::plus, DeltaSign::minus}) {
        for (const DegenerateCase w : {DegenerateCase::nu0, DegenerateCase::nu2K}) {
          exact = exact && degenerate_map(degenerate_map(x, w, c, sg, d), w, c, sg, d) == x;
        }
        for (const DegenerateCase w : {DegenerateCase::nuNu, DegenerateCase::nuNuMinus2K}) {
          degenerate.add(max_abs_diff(degenerate_map(degenerate_map(x, w, c, sg, d), w, c, sg, d), x));
        }
      }
    }
  }
  return {generic.ok() && det.ok() && degenerate.ok() && exact,
          fmt::format("generic {} ({} pairs), dEt {}, reflections exact: {}, nu/nu-2K {}",
                      generic.str(), checked, det.str(), exact ? "yes" : "no", degenerate.str())};
}

Outcome nu1_sweep() {
  OrbitSampler s(55);
  Bound b{1e-8};
  for (const CaseLabel c : kCases) {
    const auto [x0, d] = s.draw(c);
    const Orbit o = orbit_from_state(x0, d);
    const double lo = o.nu - 2.0 * o.K();
    const double hi = 2.0 * o.K();
    const State ref = compose_dEt(x0, 0.5 * o.nu, o);
    int used = 0;
    for (int j = 0; used < 20; ++j) {
      const double nu1 = lo + (hi - lo) * (j + 0.5) / 22;
      if (std::abs(nu1) < 1e-3 * o.K() || std::abs(nu1 - o.nu) < 1e-3 * o.K()) continue;
      b.add(max_abs_diff(compose_dEt(x0, nu1, o), ref));
      ++used;
    }
  }
  return {b.ok(), "20 values of nu1 per case, spread " + b.str()};
}

Outcome square_root() {
  OrbitSampler s(66);
  Bound twice{1e-10};
  Bound closed{1e-10};
  for (int i = 0; i < 50; ++i) {
    const CaseLabel c = kCases[i % 2];
    const auto [x0, d] = s.draw(c);
    twice.add(max_abs_diff(sqrt_map(sqrt_map(x0, d), d), hk_map(x0, d)));
    const Orbit o = orbit_from_state(x0, d);
    const bool a = c == CaseLabel::A;
    const Delta same = d;
    const Delta swapped = d.negated();
    closed.add(max_abs_diff(iota(x0, o.nu / 2, DeltaSign::plus, o),
                            mirror_state(sqrt_map(x0, a ? same : swapped), c)));
    closed.add(max_abs_diff(iota(x0, o.nu / 2, DeltaSign::minus, o),
                            mirror_state(sqrt_map(x0, a ? swapped : same), c)));
  }
  return {twice.ok() && closed.ok(),
          fmt::format("sqrt o sqrt vs map {}, closed forms {}", twice.str(), closed.str())};
}

Outcome degenerate_compositions() {
  OrbitSampler s(77);
  Bound b{1e-10};
  for (const CaseLabel c : kCases) {
    for (int i = 0; i < 25; ++i) {
      const auto [x0, d] = s.draw(c);
      const Orbit o = orbit_from_state(x0, d);
      const bool a = c == CaseLabel::A;
      const State f = hk_map(x0, d);
      const State y = iota(iota(x0, 0.0, DeltaSign::plus, o), o.nu,
                           a ? DeltaSign::minus : DeltaSign::plus, o);
      const State z = iota(iota(x0, o.nu - 2.0 * o.K(), a ? DeltaSign::minus : DeltaSign::plus, o),
                           2.0 * o.K(), DeltaSign::plus, o);
      b.add(max_abs_diff(y, f));
      b.add(max_abs_diff(z, f));
    }
  }
  return {b.ok(), "25 configs per case, " + b.str()};
}

Outcome lambda_table() {
  OrbitSampler s(88);
  Bound b{1e-11};
  bool zero_ok = true;
  for (const CaseLabel c : kCases) {
    for (int i = 0; i < 25; ++i) {
      const auto [x0, d] = s.draw(c);
      const Orbit o = orbit_from_state(x0, d);
      const ConservedTriple& F = o.F;
      const Modulus& k = o.chart.k;
      const double K = o.K();
      const double cone = -(1 - F.F1) / (1 - F.F3);
      const double r1 = std::sqrt(F.F1);
      const double r3 = std::sqrt(F.F3);
      b.add(rel(lambda_from_nu(2 * K, F, c, k), cone));
      b.add(rel(lambda_from_nu(o.nu - 2 * K, F, c, k), cone * F.F2));
      if (c == CaseLabel::A) {
        try {
          lambda_from_nu(0.0, F, c, k);
          zero_ok = false;
        } catch (const Error& e) {
          zero_ok = zero_ok && e.kind() == ErrorKind::LambdaInfinite;
        }
        b.add(rel(lambda_from_nu(o.nu, F, c, k), -1 / (1 - F.F3)));
        b.add(rel(lambda_from_nu(o.nu / 2, F, c, k), -(1 + r1) / (r3 * (1 - r3))));
      } else {
        zero_ok = zero_ok && lambda_from_nu(0.0, F, c, k) == 0.0;
        b.add(rel(lambda_from_nu(o.nu, F, c, k), (1 - F.F1) / F.F3));
        b.add(rel(lambda_from_nu(o.nu / 2, F, c, k), (1 - r1) / (r3 * (1 + r3))));
      }
    }
  }
  return {b.ok() && zero_ok,
          fmt::format("relative {}, nu_i = 0 (infinite in A, zero in B): {}", b.str(),
                      zero_ok ? "ok" : "wrong")};
}

Outcome sign_lemma() {
  OrbitSampler s(99);
  int bad = 0;
  int draws = 0;
  for (const CaseLabel c : kCases) {
    for (int i = 0; i < 200; ++i) {
      const auto [x0, d] = s.draw(c);
      const Orbit o = orbit_from_state(x0, d);
      double nu_i = 0.0;
      while (std::abs(nu_i) < 1e-6 * o.K() || std::abs(std::abs(nu_i) - 2 * o.K()) < 1e-6 * o.K()) {
        nu_i = s.uniform(-2 * o.K(), 2 * o.K());
      }
      const double lambda = lambda_from_nu(nu_i, o.F, c, o.chart.k);
      const DiagonalQuadric q = pencil_quadric(lambda, o.F, d, c).quadric;
      const bool a = c == CaseLabel::A;
      const bool pattern = q.c1 < 0 && q.c3 > 0 && (a ? q.c2 < 0 && q.c0 >= 0 : q.c2 > 0 && q.c0 <= 0);
      bad += !(pattern && q.c1 * q.c2 * q.c3 * q.c0 >= 0);
      ++draws;
    }
  }
  return {bad == 0, fmt::format("{} draws, {} violations", draws, bad)};
}

Outcome complex_layer() {
  OrbitSampler s(110);
  bool exact = true;
  Bound shift{4e-16};
  for (const CaseLabel c : kCases) {
    const auto [x0, d] = s.draw(c);
    const Orbit o = orbit_from_state(x0, d);
    for (int j = 0; j < 10; ++j) {
      const double nu_i = s.uniform(-2, 2) * o.K();
      for (const PhaseBranch b : {PhaseBranch::plus, PhaseBranch::minus}) {
        const PhaseMap m = complex_involution_map(nu_i, b);
        exact = exact && m.after(m).is_identity();
      }
      const PhaseMap comp = complex_involution_map(o.nu - nu_i, PhaseBranch::plus)
                                .after(complex_involution_map(nu_i, PhaseBranch::minus));
      exact = exact && comp.sigma == 1 && comp.m == 0 && comp.n == 0;
      shift.add(std::abs(comp.shift - o.nu) / std::max(1.0, std::abs(nu_i)));
    }
  }
  Bound zero{1e-8};
  double control = INFINITY;
  int zero_n = 0;
  int control_n = 0;
  while (zero_n < 50 || control_n < 50) {
    const Modulus k = Modulus::from_k(s.uniform(0.2, 0.9));
    const auto rnd = [&] { return Complex(s.uniform(-2, 2), s.uniform(-1, 1)); };
    const Complex z1 = rnd(), z2 = rnd(), z3 = rnd();
    // Controls are four independent points spread over the whole period cell.
    const QuarterPeriods p = quarter_periods(k);
    const auto cell = [&] { return Complex(s.uniform(0, 4 * p.K), s.uniform(0, 4 * p.Kprime)); };
    try {
      if (zero_n < 50) {
        zero.add(std::abs(coplanarity_det({z1, z2, z3, -(z1 + z2 + z3)}, k)));
        ++zero_n;
      } else {
        control = std::min(control, std::abs(coplanarity_det({cell(), cell(), cell(), cell()}, k)));
        ++control_n;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleProximity) throw;
    }
  }
  return {exact && shift.ok() && zero.ok() && control > 1e-4,
          fmt::format("phase algebra exact: {}, shift {}, zero-sum det {}, min control {:.3e}",
                      exact ? "yes" : "no", shift.str(), zero.str(), control)};
}

#ifdef ETG_CLI_BINARY
std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int shell(const std::string& args) {
  const std::string cmd = std::string(ETG_CLI_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
#endif

Outcome cli_determinism() {
#ifdef ETG_CLI_BINARY
  namespace fs = std::filesystem;
  ::unsetenv("ETG_TOLERANCE");
  const fs::path root = fs::temp_directory_path() / ("etg_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const std::string base = " --delta -0.05,0.05,-0.05 --x0 1,0.5,0.5 --steps 50";
  int codes = 0;
  for (const char* run : {"a", "b"}) {
    const std::string out = " --out " + (root / run).string();
    codes |= shell("evolve --mode involutions" + base + out);
    codes |= shell("geometry --obj" + base + out);
    codes |= shell("verify" + base + out);
  }
  int files = 0;
  int differing = 0;
  for (const auto& e : fs::directory_iterator(root / "a")) {
    ++files;
    differing += slurp(e.path()) != slurp(root / "b" / e.path().filename());
  }
  fs::remove_all(root);
  return {codes == 0 && files > 0 && differing == 0,
          fmt::format("{} files compared, {} differ, verify/evolve/geometry exit {}", files,
                      differing, codes)};
#else
  return {false, "command-line tool not built"};
#endif
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"conservation", conservation},
      {"elliptic identities", elliptic_identities},
      {"three-representation agreement", three_representations},
      {"involutivity", involutivity},
      {"nu1 sweep invariance", nu1_sweep},
      {"square root", square_root},
      {"degenerate compositions", degenerate_compositions},
      {"lambda degeneracy table", lambda_table},
      {"sign lemma", sign_lemma},
      {"complex layer", complex_layer},
      {"cli determinism", cli_determinism},
  };
  int failures = 0;
  int id = 0;
  for (const auto& [name, check] : criteria) {
    ++id;
    Outcome r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    failures += !r.pass;
    fmt::print("{} {:2d} {}: {}\n", r.pass ? "PASS" : "FAIL", id, name, r.detail);
  }
  fmt::print("{} of {} criteria passed\n", id - failures, id);
  return failures == 0 ? 0 : 1;
}
