#pragma once

#include <numbers>

namespace wwmtc {

/// Shape parameter of the straight (unloaded) cantilever.
inline constexpr double kStraightP = std::numbers::sqrt2 / 2;

/// Largest shape parameter accepted; the beam curls up completely at p = 1.
inline constexpr double kMaxP = 1.0 - 1e-9;

/// Elastica shape parameter p in [1/sqrt(2), 1 - 1e-9].
///
/// p is the elliptic modulus of the bent-beam family. sin(psi0) = 2p^2 - 1,
/// so p = 1/sqrt(2) is the straight beam and p -> 1 turns the tip parallel
/// to the load.
class ShapeParam {
 public:
  /// Throws DomainError outside [kStraightP, kMaxP].
  explicit ShapeParam(double p);

  static ShapeParam straight() { return ShapeParam(kStraightP); }

  double value() const noexcept { return p_; }

  friend bool operator==(ShapeParam, ShapeParam) = default;

 private:
  double p_;
};

/// Undeformed arc length of one cantilever, in mm.
struct BeamSpec {
  double length_mm;
};

/// Large-deflection cantilever under a tip load perpendicular to the clamp.
///
/// w is the tip offset along the clamp direction, h the tip deflection along
/// the load. Both in mm. psi0 is the tip angle from the clamp direction.
struct BeamSolution {
  double w;     ///< mm
  double h;     ///< mm
  double psi0;  ///< rad
  double k;     ///< 1/mm, sqrt(load / bending stiffness)
  double phi1;  ///< rad, elliptic amplitude at the clamp
};

/// Closed-form elastica via incomplete elliptic integrals.
///
/// At p = 1/sqrt(2) the beam is straight and the general formulas are 0/0;
/// the exact limit w = L, h = 0, psi0 = 0, k = 0 is returned instead.
BeamSolution solve_beam(BeamSpec spec, ShapeParam p);

/// Tip deflection at kMaxP, the largest h reachable by solve_beam.
double max_height(BeamSpec spec);

/// Inverse of solve_beam in h. h is strictly increasing in p, so a bracketed
/// bisection on [kStraightP, kMaxP] converges to |h(p) - h_target| <= 1e-9 L.
///
/// Throws DomainError if h_target < 0 and OutOfRangeError carrying
/// [0, max_height(spec)] if h_target exceeds the reachable deflection.
ShapeParam solve_p_for_height(BeamSpec spec, double h_target);

}  // namespace wwmtc
