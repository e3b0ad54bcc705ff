#pragma once

#include <span>

namespace wwmtc {

/// One row of a tendon load test log.
struct TendonSample {
  double time_s = 0.0;
  double load_n = 0.0;
  double strain = 0.0;
  int cycle = 0;  ///< loading-cycle index; the smallest index is the bedding-in cycle
};

enum class TendonModelKind { exponential };

/// P = a (exp(b (strain - eps0)) - 1) for strain >= eps0, 0 below.
struct TendonFit {
  TendonModelKind model = TendonModelKind::exponential;
  double a = 0.0;     ///< N
  double b = 0.0;     ///< dimensionless
  double eps0 = 0.0;  ///< bedding-in strain offset left by the first cycle
  double rms_residual = 0.0;  ///< N, over the samples used in the fit
  int iterations = 0;
};

/// Damping schedule and stopping rules for the least-squares fit.
/// Initial guess is a = max load, b = initial_b.
struct TendonFitOptions {
  TendonModelKind model = TendonModelKind::exponential;
  double initial_b = 1.0;
  double initial_damping = 1e-3;
  double damping_up = 10.0;
  double damping_down = 0.1;
  double max_damping = 1e16;
  int max_iterations = 500;
  double step_tolerance = 1e-13;   ///< on the log-parameter step
  double cost_tolerance = 1e-15;   ///< relative cost decrease
};

/// Fits the exponential stiffening model.
///
/// eps0 is the strain of the last sample of the first cycle; a and b are then
/// fitted by damped Gauss-Newton on every later cycle with eps0 held fixed.
/// Throws DomainError on invalid samples (strain outside [0, 0.5], negative
/// load), InsufficientDataError on fewer than 10 samples or fewer than 3
/// post-first-cycle samples, NonConvergenceError when the budget runs out.
TendonFit fit_tendon(std::span<const TendonSample> data, const TendonFitOptions& options = {});

/// Forward model. Throws DomainError if strain < 0.
double tendon_load(const TendonFit& fit, double strain);

}  // namespace wwmtc
