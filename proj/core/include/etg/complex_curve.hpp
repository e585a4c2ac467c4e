#pragma once

#include <array>
#include <complex>

#include "etg/curve.hpp"
#include "etg/elliptic.hpp"

namespace etg {

using Complex = std::complex<double>;
using ComplexPoint = std::array<Complex, 3>;

/// A point of the period parallelogram [0, 4K) x [0, 4K').
struct ComplexPhase {
  Complex z;

  /// Reduces z into the fundamental parallelogram; idempotent.
  static ComplexPhase normalized(Complex z, const QuarterPeriods& p);
};

/// The complex embedding of the base curve: the chart's + component evaluated at
/// complex argument. Im z = 0 gives v+(u), Im z = 2K' gives the other component.
/// Throws PoleProximity.
ComplexPoint phi(Complex z, const CurveChart& chart);

/// Affine phase map z -> sigma z + m K + i n K' + shift.
///
/// The period multiples are kept as integers so that compositions cancel exactly.
struct PhaseMap {
  int sigma = 1;
  int m = 0;
  int n = 0;
  double shift = 0.0;

  Complex apply(Complex z, const QuarterPeriods& p) const;
  /// (*this) o inner.
  PhaseMap after(const PhaseMap& inner) const;
  bool is_identity() const noexcept { return sigma == 1 && m == 0 && n == 0 && shift == 0.0; }
};

enum class PhaseBranch { plus, minus };

/// z -> 2iK' - (z + 2K) +- nu_i.
PhaseMap complex_involution_map(double nu_i, PhaseBranch branch);

ComplexPhase complex_involution(const ComplexPhase& z, double nu_i, PhaseBranch branch,
                                const QuarterPeriods& p);

/// det of the rows (cn z_i, sn z_i, dn z_i, 1). Vanishes when the z_i sum to a period.
Complex coplanarity_det(const std::array<Complex, 4>& z, const Modulus& k);

/// det of the rows (x_i, 1) for four real points.
double coplanarity_det(const std::array<Vec3, 4>& points);

}  // namespace etg
