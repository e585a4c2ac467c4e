#pragma once

#include <array>
#include <optional>

#include "etg/vec3.hpp"

namespace etg {

/// Sign pattern of (d1, d2, d3).
enum class DeltaRegime {
  canonical,  // (-, +, -)
  reversed,   // (+, -, +)
  zero,       // all components zero
  mixed,      // anything else
};

/// Step parameters d_i = eps * alpha_i / 2 of the discrete Euler top.
class Delta {
 public:
  Delta() = default;
  Delta(double d1, double d2, double d3);
  explicit Delta(const Vec3& d) : Delta(d[0], d[1], d[2]) {}

  /// Builds d_i = eps * alpha_i / 2 and records (eps, alpha).
  static Delta from_eps_alpha(double eps, const Vec3& alpha);

  double operator[](std::size_t i) const { return d_[i]; }
  const Vec3& components() const noexcept { return d_; }
  DeltaRegime regime() const noexcept { return regime_; }

  /// +1 for the canonical regime, -1 for the reversed one, 0 otherwise.
  int orientation() const noexcept;

  /// The same parameters with all signs flipped (time reversal).
  Delta negated() const;

  /// Throws RegimeViolation unless regime() is canonical or reversed.
  void require_regime() const;

  std::optional<double> eps() const noexcept { return eps_; }
  std::optional<Vec3> alpha() const noexcept { return alpha_; }

 private:
  Vec3 d_{};
  DeltaRegime regime_ = DeltaRegime::zero;
  std::optional<double> eps_;
  std::optional<Vec3> alpha_;
};

struct ConservedTriple {
  double F1 = 1.0;
  double F2 = 1.0;
  double F3 = 1.0;

  double product() const noexcept { return F1 * F2 * F3; }
  /// F1 in (0, 1) and F3 > 1.
  bool admissible() const noexcept { return F1 > 0.0 && F1 < 1.0 && F3 > 1.0; }
};

/// case A: F2 > 1, components mirrored in the x,y-plane.
/// case B: F2 < 1, components mirrored in the y,z-plane.
enum class CaseLabel { A, B };

/// The quadric c1*x1^2 + c2*x2^2 + c3*x3^2 + c0 = 0.
struct DiagonalQuadric {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c0 = 0.0;

  double evaluate(const Vec3& x) const noexcept {
    return c1 * x[0] * x[0] + c2 * x[1] * x[1] + c3 * x[2] * x[2] + c0;
  }
  /// Symmetric bilinear form <(x,1), (y,1)>.
  double pairing(const Vec3& x, const Vec3& y) const noexcept {
    return c1 * x[0] * y[0] + c2 * x[1] * y[1] + c3 * x[2] * y[2] + c0;
  }

  friend DiagonalQuadric operator+(const DiagonalQuadric& p, const DiagonalQuadric& q) {
    return {p.c1 + q.c1, p.c2 + q.c2, p.c3 + q.c3, p.c0 + q.c0};
  }
  friend DiagonalQuadric operator*(double s, const DiagonalQuadric& q) {
    return {s * q.c1, s * q.c2, s * q.c3, s * q.c0};
  }
};

/// Explicit birational map x -> x~. Throws VanishingDenominator on the exceptional locus.
State hk_map(const State& x, const Delta& delta);

/// f(x, -delta).
State hk_inverse(const State& x, const Delta& delta);

/// Residuals x~_i - x_i - d_i (x~_j x_k + x_j x~_k) of the implicit equations.
Vec3 hk_residual(const State& x, const State& xt, const Delta& delta);

ConservedTriple conserved(const State& x, const Delta& delta);

/// Throws BoundaryCase when |F2 - 1| <= 1e-10.
CaseLabel classify_case(const ConservedTriple& F);

/// Throws RegimeViolation unless F is admissible and delta is canonical or reversed.
void require_admissible(const ConservedTriple& F, const Delta& delta);

/// The level sets C1, C2, C3 of F1, F2, F3.
std::array<DiagonalQuadric, 3> cylinders(const ConservedTriple& F, const Delta& delta);

}  // namespace etg
