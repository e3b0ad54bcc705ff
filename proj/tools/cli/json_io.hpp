#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "wwmtc/design.hpp"
#include "wwmtc/muscle.hpp"
#include "wwmtc/tendon.hpp"
#include "wwmtc/winch.hpp"

namespace wwmtc::cli {

using json = nlohmann::ordered_json;

json load_json(const std::filesystem::path& path);

/// Number rounded to 15 significant digits; null when not finite.
json number(double x);

/// Pretty-printed with a trailing newline.
std::string dump(const json& j);

/// {"n": 8, "L_mm": 27, "h0_mm": 22, "kind": "radial"}
MuscleSpec spec_from_json(const json& j, const std::string& source);
json to_json(const MuscleSpec& spec);

/// Fields: natural_length_range, min_stroke, max_width_at_full,
/// min_width_at_full, h0, n_range, L_range, kind. Omitted optional fields
/// leave that quantity unconstrained.
DesignConstraints constraints_from_json(const json& j, const std::string& source);

json to_json(const DesignResult& result);
json to_json(const MuscleState& state);
json to_json(const TendonFit& fit);
json to_json(const WinchFit& fit);

/// {"model": "play", "c": 20, "r": 5}; other keys are ignored so fit output
/// can be fed back in.
HysteresisParams params_from_json(const json& j, const std::string& source);

}  // namespace wwmtc::cli
