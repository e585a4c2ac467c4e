#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "etg/dynamics.hpp"
#include "etg/vec3.hpp"
#include "etg_cli/config.hpp"

namespace etg::cli {

struct Trajectory {
  Mode mode;
  std::vector<State> states;
  /// Involution mode only: the image of states[n] under the first involution.
  std::vector<State> intermediates;
  std::vector<ConservedTriple> F;
};

/// Throws etg::Error on invalid regimes and numerical failures.
Trajectory evolve(const RunConfig& c);

/// Header n,x1,x2,x3,F1,F2,F3 followed by one row per state.
std::string trajectory_csv(const Trajectory& t);
std::string trajectory_json(const RunConfig& c, const Trajectory& t);

struct SuiteResult {
  std::string name;
  bool pass;
  double max_error;
  double tolerance;
  int samples;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool all_pass() const;
};

VerifyReport verify(const RunConfig& c);
std::string report_json(const RunConfig& c, const VerifyReport& r);

struct LabeledQuadric {
  std::string label;
  DiagonalQuadric quadric;
};

struct LabeledPolyline {
  std::string label;
  std::vector<State> points;
};

struct LabeledSegment {
  std::string label;
  State from;
  State to;
};

struct GeometryBundle {
  std::vector<LabeledQuadric> quadrics;
  std::vector<LabeledPolyline> curves;
  std::vector<LabeledSegment> generators;

  const LabeledQuadric* find(const std::string& label) const;
};

struct GeometryOptions {
  int curve_samples = 256;
  int resolution = 64;
  double extent = 2.0;
};

GeometryBundle geometry(const RunConfig& c, const GeometryOptions& opt = {});
std::string bundle_json(const RunConfig& c, const GeometryBundle& b);

/// Parametric tessellation with resolution x resolution quads. Hyperboloids use
/// their rulings b(u) + v d(u) with |v| <= extent; cones and cylinders are cut
/// at the same extent. Returns an empty string for shapes without real points.
std::string quadric_obj(const LabeledQuadric& q, int resolution, double extent);
std::string polylines_obj(const std::vector<LabeledPolyline>& lines);
std::string segments_obj(const std::vector<LabeledSegment>& segments);

/// Entry point of the etg executable. Returns the process exit code:
/// 0 success, 1 verification failure, 2 invalid input or regime.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace etg::cli
