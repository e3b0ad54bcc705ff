#pragma once

#include <span>
#include <vector>

namespace wwmtc {

enum class WinchModelKind { play };

/// Play (backlash) operator around the ideal proportional winch T = c I.
struct HysteresisParams {
  WinchModelKind model = WinchModelKind::play;
  double c = 1.0;  ///< N/A
  double r = 0.0;  ///< N, friction half-band

  /// Throws DomainError unless c > 0 and r >= 0.
  void validate() const;
};

struct WinchSample {
  double time_s = 0.0;
  double current_a = 0.0;
  double tension_n = 0.0;
};

struct WinchFit {
  HysteresisParams params;
  double rms_residual = 0.0;  ///< N, measured vs simulated tension
  int reversals = 0;
};

/// T_k = clamp(T_{k-1}, c I_k - r, c I_k + r), starting from initial_tension.
/// Rate independent: only the order of current values matters.
/// Throws DomainError on an empty series or invalid params.
std::vector<double> simulate_winch(const HysteresisParams& params,
                                   std::span<const double> current,
                                   double initial_tension = 0.0);

/// Area of the steady loop traced by a current sweep of the given amplitude
/// (half peak-to-peak): 4 r (c A - r) / c, or 0 when c A <= r.
double play_loop_area(const HysteresisParams& params, double amplitude_a);

/// Identifies (c, r) from a current/tension log.
///
/// Each monotone run of current starts with a stuck section of width 2r/c
/// after a reversal. Those sections are excluded iteratively; c is the
/// least-squares slope of the remaining rising-current points and r half the
/// mean vertical gap from that line to the falling-current points inside the
/// rising span. Throws InsufficientDataError when the current never reverses.
WinchFit fit_winch(std::span<const WinchSample> data);

}  // namespace wwmtc
