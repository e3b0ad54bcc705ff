#pragma once

// Incomplete and complete elliptic integrals of the first and second kind.
//
// All functions take the modulus p (the integrand is 1 - p^2 sin^2(theta)),
// never the parameter m = p^2. Amplitudes are restricted to the first
// quadrant [0, pi/2] and moduli to [0, kMaxModulus].

namespace wwmtc::elliptic {

/// Largest modulus accepted. K(p) has a logarithmic singularity at p = 1.
inline constexpr double kMaxModulus = 1.0 - 1e-9;

/// F(phi, p) = int_0^phi dtheta / sqrt(1 - p^2 sin^2 theta)
double ellip_f(double phi, double p);

/// E(phi, p) = int_0^phi sqrt(1 - p^2 sin^2 theta) dtheta
double ellip_e(double phi, double p);

/// K(p) = F(pi/2, p)
double ellip_k(double p);

/// E(p) = E(pi/2, p)
double ellip_e_complete(double p);

/// Carlson's symmetric integral R_F(x, y, z). At most one argument may be 0.
double carlson_rf(double x, double y, double z);

/// Carlson's symmetric integral R_D(x, y, z). z > 0, at most one of x, y 0.
double carlson_rd(double x, double y, double z);

}  // namespace wwmtc::elliptic
