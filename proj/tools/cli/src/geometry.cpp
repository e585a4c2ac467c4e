#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <optional>

#include "etg/curve.hpp"
#include "etg/involution.hpp"
#include "etg_cli/commands.hpp"
#include "json_writer.hpp"

namespace etg::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec3 axis_vec(std::size_t i, double s) {
  Vec3 e;
  e[i] = s;
  return e;
}

// Grid of (resolution + 1) x (resolution + 1) vertices; wrap joins the last u column to the first.
struct Surface {
  std::vector<Vec3> vertices;
  int nu = 0;
  int nv = 0;
  bool wrap_u = false;
};

std::string surface_obj(const std::string& label, const std::vector<Surface>& parts) {
  std::string out = fmt::format("o {}\n", label);
  std::size_t base = 1;
  for (const Surface& s : parts) {
    for (const Vec3& p : s.vertices) {
      out += fmt::format("v {} {} {}\n", format_number(p[0]), format_number(p[1]),
                         format_number(p[2]));
    }
    const int cols = s.wrap_u ? s.nu : s.nu + 1;
    const auto id = [&](int i, int j) {
      return base + static_cast<std::size_t>(j) * cols + static_cast<std::size_t>(i % cols);
    };
    for (int j = 0; j < s.nv; ++j) {
      for (int i = 0; i < s.nu; ++i) {
        out += fmt::format("f {} {} {} {}\n", id(i, j), id(i + 1, j), id(i + 1, j + 1),
                           id(i, j + 1));
      }
    }
    base += s.vertices.size();
  }
  return out;
}

// The two axes other than skip.
std::array<std::size_t, 2> others(std::size_t skip) {
  switch (skip) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

std::optional<std::vector<Surface>> tessellate(const DiagonalQuadric& q, int res, double extent) {
  const std::array<double, 3> c{q.c1, q.c2, q.c3};
  std::size_t zeros = 0;
  std::size_t zero_axis = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (c[i] == 0.0) {
      ++zeros;
      zero_axis = i;
    }
  }

  if (zeros == 1) {
    // Cylinder over the conic a x^2 + b y^2 + c0 = 0 in the plane of the other axes.
    const auto [p, r] = others(zero_axis);
    Surface s{{}, res, res, false};
    double a = c[p];
    double b = c[r];
    const double c0 = q.c0;
    if (c0 == 0.0) return std::nullopt;
    a /= -c0;
    b /= -c0;
    std::vector<Surface> parts;
    if (a > 0.0 && b > 0.0) {
      s.wrap_u = true;
      for (int j = 0; j <= res; ++j) {
        const double h = extent * (2.0 * j / res - 1.0);
        for (int i = 0; i < res; ++i) {
          const double t = kTwoPi * i / res;
          Vec3 x = axis_vec(zero_axis, h);
          x[p] = std::cos(t) / std::sqrt(a);
          x[r] = std::sin(t) / std::sqrt(b);
          s.vertices.push_back(x);
        }
      }
      parts.push_back(std::move(s));
      return parts;
    }
    if (a <= 0.0 && b <= 0.0) return std::nullopt;
    // Hyperbola: the positive axis carries the two branches.
    const std::size_t pos = a > 0.0 ? p : r;
    const std::size_t neg = a > 0.0 ? r : p;
    const double ap = a > 0.0 ? a : b;
    const double an = -(a > 0.0 ? b : a);
    const double T = std::asinh(extent * std::sqrt(an));
    for (double branch : {1.0, -1.0}) {
      Surface part{{}, res, res, false};
      for (int j = 0; j <= res; ++j) {
        const double h = extent * (2.0 * j / res - 1.0);
        for (int i = 0; i <= res; ++i) {
          const double t = T * (2.0 * i / res - 1.0);
          Vec3 x = axis_vec(zero_axis, h);
          x[pos] = branch * std::cosh(t) / std::sqrt(ap);
          x[neg] = std::sinh(t) / std::sqrt(an);
          part.vertices.push_back(x);
        }
      }
      parts.push_back(std::move(part));
    }
    return parts;
  }
  if (zeros != 0) return std::nullopt;

  // a_i x_i^2 = 1 after dividing by -c0 (or a cone when c0 = 0). One sheet when
  // exactly one a_i is negative; that index is the axis.
  const double scale = q.c0 != 0.0 ? -q.c0 : 1.0;
  std::array<double, 3> a{c[0] / scale, c[1] / scale, c[2] / scale};
  std::size_t negatives = 0;
  std::size_t axis = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] < 0.0) {
      ++negatives;
      axis = i;
    }
  }
  if (q.c0 == 0.0 && negatives == 2) {
    for (double& v : a) v = -v;
    negatives = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      if (a[i] < 0.0) axis = i;
    }
  }
  if (negatives != 1) return std::nullopt;
  const auto [p, r] = others(axis);
  const double sp = 1.0 / std::sqrt(a[p]);
  const double sr = 1.0 / std::sqrt(a[r]);
  const double sn = 1.0 / std::sqrt(-a[axis]);
  Surface s{{}, res, res, true};
  for (int j = 0; j <= res; ++j) {
    const double v = extent * (2.0 * j / res - 1.0);
    for (int i = 0; i < res; ++i) {
      const double u = kTwoPi * i / res;
      Vec3 base;
      Vec3 dir;
      if (q.c0 != 0.0) {
        // b(u) on the waist ellipse, d(u) = b'(u) + e_axis / sqrt(-a_axis).
        base[p] = sp * std::cos(u);
        base[r] = sr * std::sin(u);
        dir[p] = -sp * std::sin(u);
        dir[r] = sr * std::cos(u);
      } else {
        dir[p] = sp * std::cos(u);
        dir[r] = sr * std::sin(u);
      }
      dir[axis] = sn;
      s.vertices.push_back(base + v * dir);
    }
  }
  return std::vector<Surface>{std::move(s)};
}

std::string polyline_block(const std::string& label, const std::vector<State>& points) {
  std::string out = fmt::format("o {}\n", label);
  for (const State& p : points) {
    out += fmt::format("v {} {} {}\n", format_number(p[0]), format_number(p[1]),
                       format_number(p[2]));
  }
  return out;
}

}  // namespace

const LabeledQuadric* GeometryBundle::find(const std::string& label) const {
  for (const LabeledQuadric& q : quadrics) {
    if (q.label == label) return &q;
  }
  return nullptr;
}

GeometryBundle geometry(const RunConfig& c, const GeometryOptions& opt) {
  validate(c);
  const Delta delta(c.delta);
  const ConservedTriple F = conserved(c.x0, delta);
  require_admissible(F, delta);
  const Orbit o = orbit_from_state(c.x0, delta);
  const double nu1 = c.nu1.value_or(0.5 * o.nu);
  const double nu2 = o.nu - nu1;

  GeometryBundle b;
  const auto C = cylinders(F, delta);
  b.quadrics.push_back({"C1", C[0]});
  b.quadrics.push_back({"C2", C[1]});
  b.quadrics.push_back({"C3", C[2]});

  const DiagonalQuadric H1 = make_involution_spec(nu1, DeltaSign::plus, o).H.quadric;
  const DiagonalQuadric H2 = make_involution_spec(nu2, DeltaSign::plus, o).H.quadric;
  const bool coincident = std::abs(nu1 - nu2) <= 1e-12 * o.K();
  const std::string l1 = coincident ? "H1=H2" : "H1";
  const std::string l2 = coincident ? "H1=H2" : "H2";
  b.quadrics.push_back({l1, H1});
  if (!coincident) b.quadrics.push_back({l2, H2});

  for (ComponentSign s : {ComponentSign::plus, ComponentSign::minus}) {
    const CurveChart chart = with_component(o.chart, s);
    LabeledPolyline line{s == ComponentSign::plus ? "v+" : "v-", {}};
    const int n = std::max(opt.curve_samples, 2);
    for (int i = 0; i <= n; ++i) line.points.push_back(curve_point(chart, 4.0 * o.K() * i / n));
    b.curves.push_back(std::move(line));
  }

  State x = c.x0;
  for (int n = 0; n < c.steps; ++n) {
    const Orbit on = orbit_from_state(x, delta);
    const Composition step = compose_dEt_steps(x, c.nu1.value_or(0.5 * on.nu), on);
    b.generators.push_back({l1, x, step.intermediate});
    b.generators.push_back({l2, step.intermediate, step.result});
    x = step.result;
  }
  return b;
}

std::string bundle_json(const RunConfig& c, const GeometryBundle& b) {
  JsonWriter w;
  w.begin_object();
  w.key("config");
  write_config(w, c);
  w.key("quadrics").begin_array();
  for (const LabeledQuadric& q : b.quadrics) {
    w.begin_object();
    w.key("label").value(q.label);
    w.key("coefficients").begin_array();
    for (double v : {q.quadric.c1, q.quadric.c2, q.quadric.c3, q.quadric.c0}) w.value(v);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.key("curves").begin_array();
  for (const LabeledPolyline& l : b.curves) {
    w.begin_object();
    w.key("label").value(l.label);
    w.key("points").begin_array();
    for (const State& p : l.points) w.value(p);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.key("generators").begin_array();
  for (const LabeledSegment& s : b.generators) {
    w.begin_object();
    w.key("label").value(s.label);
    w.key("from").value(s.from);
    w.key("to").value(s.to);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string quadric_obj(const LabeledQuadric& q, int resolution, double extent) {
  const auto parts = tessellate(q.quadric, std::max(resolution, 1), extent);
  if (!parts) return {};
  return surface_obj(q.label, *parts);
}

std::string polylines_obj(const std::vector<LabeledPolyline>& lines) {
  std::string out;
  std::size_t base = 1;
  for (const LabeledPolyline& l : lines) {
    out += polyline_block(l.label, l.points);
    out += "l";
    for (std::size_t i = 0; i < l.points.size(); ++i) out += fmt::format(" {}", base + i);
    out += "\n";
    base += l.points.size();
  }
  return out;
}

std::string segments_obj(const std::vector<LabeledSegment>& segments) {
  std::string out;
  std::size_t base = 1;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const LabeledSegment& s = segments[i];
    out += polyline_block(fmt::format("{}_{}", s.label, i), {s.from, s.to});
    out += fmt::format("l {} {}\n", base, base + 1);
    base += 2;
  }
  return out;
}

}  // namespace etg::cli
