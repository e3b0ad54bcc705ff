#include "wwmtc/elastica.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wwmtc/elliptic.hpp"
#include "wwmtc/errors.hpp"

namespace wwmtc {

namespace {

void check_beam(BeamSpec spec) {
  if (!(spec.length_mm > 0.0) || !std::isfinite(spec.length_mm)) {
    std::ostringstream msg;
    msg << "beam length L=" << spec.length_mm << " mm must be positive and finite";
    throw DomainError(msg.str());
  }
}

}  // namespace

ShapeParam::ShapeParam(double p) : p_(p) {
  if (!(p >= kStraightP && p <= kMaxP)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "shape parameter p=" << p << " outside valid range [1/sqrt(2), 1-1e-9] = ["
        << kStraightP << ", " << kMaxP << "]";
    throw DomainError(msg.str());
  }
}

BeamSolution solve_beam(BeamSpec spec, ShapeParam shape) {
  check_beam(spec);
  const double L = spec.length_mm;
  const double p = shape.value();

  // sin(psi0) = 2p^2 - 1, evaluated without cancellation near the straight beam.
  // kStraightP is the double nearest 1/sqrt(2) and sits just above it.
  const double sin_psi0 = std::fma(2 * p, p, -1.0);
  if (p <= kStraightP || sin_psi0 <= 0.0) {
    return BeamSolution{.w = L, .h = 0.0, .psi0 = 0.0, .k = 0.0, .phi1 = std::numbers::pi / 2};
  }

  const double sin_phi1 = kStraightP / p;
  const double cos_phi1 = std::sqrt(sin_psi0) * kStraightP / p;
  const double phi1 = std::atan2(sin_phi1, cos_phi1);

  // Tails over [phi1, pi/2] through the complementary amplitude psi1,
  // tan(phi1) tan(psi1) = 1/sqrt(1 - p^2):
  //   K(p) - F(phi1, p) = F(psi1, p)
  //   E(p) - E(phi1, p) = E(psi1, p) - p^2 sin(phi1) sin(psi1)
  // These avoid the cancellation in the direct differences as phi1 -> pi/2 (p
  // near the straight beam). Near p = 1 it is psi1 that approaches pi/2, where F
  // is nearly singular, so the direct form is used there instead.
  const double kc = std::sqrt((1 - p) * (1 + p));
  const double psi1 = std::atan2(cos_phi1, kc * sin_phi1);
  double f_tail, e_tail;
  if (psi1 < phi1) {
    f_tail = elliptic::ellip_f(psi1, p);
    e_tail = elliptic::ellip_e(psi1, p) - p * p * sin_phi1 * std::sin(psi1);
  } else {
    f_tail = elliptic::ellip_k(p) - elliptic::ellip_f(phi1, p);
    e_tail = elliptic::ellip_e_complete(p) - elliptic::ellip_e(phi1, p);
  }

  if (f_tail < 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "elastica scale factor k*L=" << f_tail << " too small at p=" << p;
    throw NumericalError(msg.str());
  }
  const double k = f_tail / L;

  BeamSolution sol;
  sol.k = k;
  sol.phi1 = phi1;
  sol.psi0 = std::asin(sin_psi0);
  // Clamp rounding noise at the ends of the range.
  sol.w = std::min(L, std::sqrt(2 * sin_psi0) / k);
  sol.h = std::clamp((f_tail - 2 * e_tail) / k, 0.0, L);
  return sol;
}

double max_height(BeamSpec spec) { return solve_beam(spec, ShapeParam(kMaxP)).h; }

ShapeParam solve_p_for_height(BeamSpec spec, double h_target) {
  check_beam(spec);
  if (!(h_target >= 0.0) || !std::isfinite(h_target)) {
    std::ostringstream msg;
    msg << "target height " << h_target << " mm must be nonnegative";
    throw DomainError(msg.str());
  }
  const double h_max = max_height(spec);
  if (h_target > h_max) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "target height " << h_target << " mm not reachable for L=" << spec.length_mm
        << " mm; feasible range [0, " << h_max << "] mm";
    throw OutOfRangeError(msg.str(), 0.0, h_max);
  }
  if (h_target == 0.0) return ShapeParam::straight();
  if (h_target == h_max) return ShapeParam(kMaxP);

  double lo = kStraightP;
  double hi = kMaxP;
  double h_lo = 0.0;
  double h_hi = h_max;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double h_mid = solve_beam(spec, ShapeParam(mid)).h;
    if (h_mid < h_target) {
      lo = mid;
      h_lo = h_mid;
    } else {
      hi = mid;
      h_hi = h_mid;
    }
  }
  return ShapeParam(h_target - h_lo <= h_hi - h_target ? lo : hi);
}

}  // namespace wwmtc
