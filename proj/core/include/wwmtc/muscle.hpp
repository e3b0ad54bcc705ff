#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wwmtc/elastica.hpp"

namespace wwmtc {

/// Default upper end of the sampled shape-parameter range (psi0 ~ 62 deg).
inline constexpr double kDefaultPCap = 0.97;

/// Descriptive label only; both kinds share the same axial model.
enum class MuscleKind { radial, planar };

std::string_view to_string(MuscleKind kind);
/// Throws DomainError on anything but "radial" or "planar".
MuscleKind muscle_kind_from_string(std::string_view name);

/// n arches of beam length L stacked along the muscle, plus a fixed offset h0
/// from sheet thickness and end components.
struct MuscleSpec {
  int n = 1;
  double beam_length_mm = 0.0;  ///< L
  double offset_mm = 0.0;       ///< h0
  MuscleKind kind = MuscleKind::radial;

  /// Throws DomainError unless n >= 1, L > 0, h0 >= 0.
  void validate() const;

  BeamSpec beam() const { return BeamSpec{beam_length_mm}; }

  /// n = 8, L = 27 mm, h0 = 22 mm.
  static MuscleSpec radial_reference();
  /// n = 6, L = 35 mm, h0 = 14.5 mm.
  static MuscleSpec planar_reference();
};

struct MuscleState {
  double p = kStraightP;
  double width_mm = 0.0;
  double length_mm = 0.0;
  double contraction_mm = 0.0;  ///< natural_length - length
  double psi0_rad = 0.0;
};

/// States sampled over p, ordered by strictly decreasing length.
struct DeformationCurve {
  MuscleSpec spec;
  std::vector<MuscleState> samples;
};

/// n L + h0: the length with every arch extended to h = L (the p -> 1 limit).
double natural_length(const MuscleSpec& spec);

/// width = w(L, p), length = n h(L, p) + h0.
MuscleState state_at(const MuscleSpec& spec, ShapeParam p);

/// Samples p uniformly on [1/sqrt(2), p_cap]; the returned states run from
/// p_cap (longest) down to the straight beam (shortest, widest).
/// Throws DomainError if num_samples < 2.
DeformationCurve curve(const MuscleSpec& spec, int num_samples,
                       ShapeParam p_cap = ShapeParam(kDefaultPCap));

/// [h0, n max_height(L) + h0]: every length state_for_length can reach.
std::pair<double, double> feasible_length_range(const MuscleSpec& spec);

/// Inverse of state_at in length, through solve_p_for_height on
/// (length - h0) / n. Throws OutOfRangeError carrying feasible_length_range.
MuscleState state_for_length(const MuscleSpec& spec, double length_target);

/// Reads p_cap from WWMTC_P_CAP if set, otherwise kDefaultPCap.
/// Throws DomainError on an unparsable or out-of-range value.
ShapeParam default_p_cap();

}  // namespace wwmtc
