#include "wwmtc/muscle.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "wwmtc/errors.hpp"

namespace wwmtc {

std::string_view to_string(MuscleKind kind) {
  return kind == MuscleKind::radial ? "radial" : "planar";
}

MuscleKind muscle_kind_from_string(std::string_view name) {
  if (name == "radial") return MuscleKind::radial;
  if (name == "planar") return MuscleKind::planar;
  throw DomainError("muscle kind must be \"radial\" or \"planar\", got \"" + std::string(name) +
                    "\"");
}

void MuscleSpec::validate() const {
  std::ostringstream msg;
  if (n < 1) {
    msg << "arch count n=" << n << " must be >= 1";
  } else if (!(beam_length_mm > 0.0) || !std::isfinite(beam_length_mm)) {
    msg << "beam length L=" << beam_length_mm << " mm must be positive";
  } else if (!(offset_mm >= 0.0) || !std::isfinite(offset_mm)) {
    msg << "length offset h0=" << offset_mm << " mm must be nonnegative";
  } else {
    return;
  }
  throw DomainError(msg.str());
}

MuscleSpec MuscleSpec::radial_reference() { return {8, 27.0, 22.0, MuscleKind::radial}; }

MuscleSpec MuscleSpec::planar_reference() { return {6, 35.0, 14.5, MuscleKind::planar}; }

double natural_length(const MuscleSpec& spec) {
  spec.validate();
  return spec.n * spec.beam_length_mm + spec.offset_mm;
}

MuscleState state_at(const MuscleSpec& spec, ShapeParam p) {
  const double natural = natural_length(spec);
  const BeamSolution beam = solve_beam(spec.beam(), p);
  MuscleState state;
  state.p = p.value();
  state.width_mm = beam.w;
  state.length_mm = spec.n * beam.h + spec.offset_mm;
  state.contraction_mm = natural - state.length_mm;
  state.psi0_rad = beam.psi0;
  return state;
}

DeformationCurve curve(const MuscleSpec& spec, int num_samples, ShapeParam p_cap) {
  spec.validate();
  if (num_samples < 2) {
    throw DomainError("curve needs at least 2 samples, got " + std::to_string(num_samples));
  }
  DeformationCurve out{spec, {}};
  out.samples.reserve(static_cast<std::size_t>(num_samples));
  const double span = p_cap.value() - kStraightP;
  for (int i = num_samples - 1; i >= 0; --i) {
    const double p = i == num_samples - 1 ? p_cap.value()
                                          : kStraightP + span * i / (num_samples - 1);
    out.samples.push_back(state_at(spec, ShapeParam(p)));
  }
  return out;
}

std::pair<double, double> feasible_length_range(const MuscleSpec& spec) {
  spec.validate();
  return {spec.offset_mm, spec.n * max_height(spec.beam()) + spec.offset_mm};
}

MuscleState state_for_length(const MuscleSpec& spec, double length_target) {
  const auto [lo, hi] = feasible_length_range(spec);
  if (!(length_target >= lo && length_target <= hi)) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "muscle length " << length_target << " mm outside feasible range [" << lo << ", "
        << hi << "] mm";
    throw OutOfRangeError(msg.str(), lo, hi);
  }
  const double h_target = std::min((length_target - spec.offset_mm) / spec.n,
                                   max_height(spec.beam()));
  return state_at(spec, solve_p_for_height(spec.beam(), std::max(0.0, h_target)));
}

ShapeParam default_p_cap() {
  const char* env = std::getenv("WWMTC_P_CAP");
  if (env == nullptr || *env == '\0') return ShapeParam(kDefaultPCap);
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0') {
    throw DomainError(std::string("WWMTC_P_CAP is not a number: \"") + env + "\"");
  }
  return ShapeParam(value);
}

}  // namespace wwmtc
