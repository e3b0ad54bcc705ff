#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the library's elliptic or elastica code.

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>

namespace wwmtc::oracle {

namespace detail {

template <class F>
double simpson_step(const F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
  const double lm = (a + m) / 2;
  const double rm = (m + b) / 2;
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15 * tol) {
    return left + right + delta / 15;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, tol / 2, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, tol / 2, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson with Richardson extrapolation, absolute tolerance tol.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double m = (a + b) / 2;
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 60);
}

// Elliptic integrals straight from their defining integrals.
inline double quad_f(double phi, double p) {
  return adaptive_simpson(
      [p](double t) { return 1.0 / std::sqrt(1.0 - p * p * std::sin(t) * std::sin(t)); }, 0.0,
      phi, 1e-14 * std::max(phi, 1e-300));
}

inline double quad_e(double phi, double p) {
  return adaptive_simpson(
      [p](double t) { return std::sqrt(1.0 - p * p * std::sin(t) * std::sin(t)); }, 0.0, phi,
      1e-14 * std::max(phi, 1e-300));
}

inline double quad_k(double p) { return quad_f(std::numbers::pi / 2, p); }
inline double quad_ec(double p) { return quad_e(std::numbers::pi / 2, p); }

/// Tip position of a cantilever clamped along +x with a load along +y,
/// obtained by integrating the inextensible-rod equations.
struct ElasticaTip {
  double w;     ///< tip x (along the clamp)
  double h;     ///< tip y (along the load)
  double load;  ///< P / EI, 1/mm^2
};

namespace detail {

struct RodState {
  double theta, omega, x, y;
};

// Integrates theta'' = -lambda cos(theta) from the free end (theta = psi0,
// theta' = 0) back to the clamp with classical RK4.
inline RodState integrate_from_tip(double length, double psi0, double lambda, int steps) {
  auto deriv = [lambda](const RodState& s) {
    return RodState{s.omega, -lambda * std::cos(s.theta), std::cos(s.theta), std::sin(s.theta)};
  };
  auto axpy = [](const RodState& s, double h, const RodState& d) {
    return RodState{s.theta + h * d.theta, s.omega + h * d.omega, s.x + h * d.x, s.y + h * d.y};
  };
  const double ds = -length / steps;
  RodState s{psi0, 0.0, 0.0, 0.0};
  for (int i = 0; i < steps; ++i) {
    const RodState k1 = deriv(s);
    const RodState k2 = deriv(axpy(s, ds / 2, k1));
    const RodState k3 = deriv(axpy(s, ds / 2, k2));
    const RodState k4 = deriv(axpy(s, ds, k3));
    s.theta += ds / 6 * (k1.theta + 2 * k2.theta + 2 * k3.theta + k4.theta);
    s.omega += ds / 6 * (k1.omega + 2 * k2.omega + 2 * k3.omega + k4.omega);
    s.x += ds / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    s.y += ds / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
  }
  return s;
}

}  // namespace detail

/// Shoots on the load magnitude until the clamp angle is zero for the given
/// tip angle psi0 (radians from the clamp direction), then reads the tip.
inline ElasticaTip elastica_shooting(double length, double psi0, int steps = 4000) {
  if (psi0 <= 0.0) return {length, 0.0, 0.0};
  auto clamp_angle = [&](double lambda) {
    return detail::integrate_from_tip(length, psi0, lambda, steps).theta;
  };
  double lo = 0.0;
  double hi = 1.0 / (length * length);
  while (clamp_angle(hi) > 0.0) {
    lo = hi;
    hi *= 2;
    if (hi > 1e6 / (length * length)) throw std::runtime_error("elastica shooting: no bracket");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    (clamp_angle(mid) > 0.0 ? lo : hi) = mid;
  }
  const double lambda = (lo + hi) / 2;
  const detail::RodState s = detail::integrate_from_tip(length, psi0, lambda, steps);
  // Integrated tip -> clamp, so the clamp sits at (-w, -h) relative to the tip.
  return {-s.x, -s.y, lambda};
}

/// Signed polygon area by the shoelace formula (closing edge implied).
inline double shoelace_area(std::span<const double> x, std::span<const double> y) {
  double twice = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t j = (i + 1) % x.size();
    twice += x[i] * y[j] - x[j] * y[i];
  }
  return twice / 2;
}

/// Relative difference with an absolute floor for values at zero.
inline double rel_diff(double actual, double expected) {
  const double scale = std::abs(expected);
  return scale > 0.0 ? std::abs(actual - expected) / scale : std::abs(actual);
}

}  // namespace wwmtc::oracle
