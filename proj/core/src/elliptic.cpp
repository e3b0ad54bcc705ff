#include "wwmtc/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wwmtc/errors.hpp"

namespace wwmtc::elliptic {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Carlson (1995) duplication thresholds, tuned for full double precision.
const double kTol = std::numeric_limits<double>::epsilon() * 0.01;
const double kTolRF = std::pow(3 * kTol, 1.0 / 8);
const double kTolRD = std::pow(0.2 * kTol, 1.0 / 8);

void check_modulus(double p) {
  if (!(p >= 0.0 && p <= kMaxModulus)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "elliptic modulus p=" << p << " outside [0, " << kMaxModulus << "]";
    throw DomainError(msg.str());
  }
}

void check_amplitude(double phi) {
  if (!(phi >= 0.0 && phi <= kHalfPi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "elliptic amplitude phi=" << phi << " outside [0, pi/2]";
    throw DomainError(msg.str());
  }
}

// 1 - p^2 sin^2(phi) as (1 - p^2) + p^2 cos^2(phi): a sum of nonnegative terms,
// so it keeps full relative accuracy as p and phi approach their upper limits.
double delta_squared(double p, double c) { return (1 - p) * (1 + p) + p * p * c * c; }

}  // namespace

double carlson_rf(double x, double y, double z) {
  const double a0 = (x + y + z) / 3;
  double an = a0;
  const double q = std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)}) / kTolRF;
  double x0 = x, y0 = y, z0 = z, mul = 1;
  while (q >= mul * std::abs(an)) {
    const double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                       std::sqrt(z0) * std::sqrt(x0);
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    mul *= 4;
  }
  const double xx = (a0 - x) / (mul * an);
  const double yy = (a0 - y) / (mul * an);
  const double zz = -(xx + yy);
  const double e2 = xx * yy - zz * zz;
  const double e3 = xx * yy * zz;
  // DLMF 19.36.E1 series, Horner form.
  return (e3 * (6930 * e3 + e2 * (15015 * e2 - 16380) + 17160) +
          e2 * ((10010 - 5775 * e2) * e2 - 24024) + 240240) /
         (240240 * std::sqrt(an));
}

double carlson_rd(double x, double y, double z) {
  const double a0 = (x + y + 3 * z) / 5;
  double an = a0;
  const double q = std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)}) / kTolRD;
  double x0 = x, y0 = y, z0 = z, mul = 1, sum = 0;
  while (q >= mul * std::abs(an)) {
    const double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                       std::sqrt(z0) * std::sqrt(x0);
    sum += 1 / (mul * std::sqrt(z0) * (z0 + lam));
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    mul *= 4;
  }
  const double xx = (a0 - x) / (mul * an);
  const double yy = (a0 - y) / (mul * an);
  const double zz = -(xx + yy) / 3;
  const double e2 = xx * yy - 6 * zz * zz;
  const double e3 = (3 * xx * yy - 8 * zz * zz) * zz;
  const double e4 = 3 * (xx * yy - zz * zz) * zz * zz;
  const double e5 = xx * yy * zz * zz * zz;
  // DLMF 19.36.E2 series, Horner form.
  return ((471240 - 540540 * e2) * e5 + (612612 * e2 - 540540 * e3 - 556920) * e4 +
          e3 * (306306 * e3 + e2 * (675675 * e2 - 706860) + 680680) +
          e2 * ((417690 - 255255 * e2) * e2 - 875160) + 4084080) /
             (4084080 * mul * an * std::sqrt(an)) +
         3 * sum;
}

double ellip_k(double p) {
  check_modulus(p);
  if (p == 0.0) return kHalfPi;
  const double kc2 = (1 - p) * (1 + p);
  return carlson_rf(0.0, kc2, 1.0);
}

double ellip_e_complete(double p) {
  check_modulus(p);
  if (p == 0.0) return kHalfPi;
  const double kc2 = (1 - p) * (1 + p);
  return carlson_rf(0.0, kc2, 1.0) - p * p / 3 * carlson_rd(0.0, kc2, 1.0);
}

double ellip_f(double phi, double p) {
  check_amplitude(phi);
  check_modulus(p);
  if (phi == kHalfPi) return ellip_k(p);
  if (p == 0.0 || phi == 0.0) return phi;
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  return s * carlson_rf(c * c, delta_squared(p, c), 1.0);
}

double ellip_e(double phi, double p) {
  check_amplitude(phi);
  check_modulus(p);
  if (phi == kHalfPi) return ellip_e_complete(p);
  if (p == 0.0 || phi == 0.0) return phi;
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double c2 = c * c;
  const double d2 = delta_squared(p, c);
  return s * carlson_rf(c2, d2, 1.0) - p * p * s * s * s / 3 * carlson_rd(c2, d2, 1.0);
}

}  // namespace wwmtc::elliptic
