#include "cli/json_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "cli/csv.hpp"
#include "cli/io_error.hpp"

namespace wwmtc::cli {

namespace {

void require_object(const json& j, const std::string& source) {
  if (!j.is_object()) throw InputError(source + ": expected a JSON object");
}

void reject_unknown(const json& j, const std::string& source, const std::set<std::string>& known) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw InputError(source + ": unknown field '" + key + "'");
  }
}

double get_number(const json& j, const std::string& key, const std::string& source) {
  if (!j.contains(key)) throw InputError(source + ": missing field '" + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) throw InputError(source + ": field '" + key + "' must be a number");
  return v.get<double>();
}

double get_number_or(const json& j, const std::string& key, const std::string& source,
                     double fallback) {
  return j.contains(key) ? get_number(j, key, source) : fallback;
}

int get_int(const json& v, const std::string& what, const std::string& source) {
  if (!v.is_number_integer()) throw InputError(source + ": " + what + " must be an integer");
  return v.get<int>();
}

std::pair<double, double> get_pair(const json& j, const std::string& key,
                                   const std::string& source) {
  if (!j.contains(key)) throw InputError(source + ": missing field '" + key + "'");
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw InputError(source + ": field '" + key + "' must be [min, max]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

MuscleKind get_kind(const json& j, const std::string& source) {
  if (!j.contains("kind")) return MuscleKind::radial;
  if (!j.at("kind").is_string()) throw InputError(source + ": field 'kind' must be a string");
  return muscle_kind_from_string(j.at("kind").get<std::string>());
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": invalid JSON (" + e.what() + ")");
  }
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round15(x);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

MuscleSpec spec_from_json(const json& j, const std::string& source) {
  require_object(j, source);
  reject_unknown(j, source, {"n", "L_mm", "h0_mm", "kind"});
  if (!j.contains("n")) throw InputError(source + ": missing field 'n'");
  MuscleSpec spec;
  spec.n = get_int(j.at("n"), "field 'n'", source);
  spec.beam_length_mm = get_number(j, "L_mm", source);
  spec.offset_mm = get_number(j, "h0_mm", source);
  spec.kind = get_kind(j, source);
  spec.validate();
  return spec;
}

json to_json(const MuscleSpec& spec) {
  return {{"n", spec.n},
          {"L_mm", number(spec.beam_length_mm)},
          {"h0_mm", number(spec.offset_mm)},
          {"kind", std::string(to_string(spec.kind))}};
}

DesignConstraints constraints_from_json(const json& j, const std::string& source) {
  require_object(j, source);
  reject_unknown(j, source,
                 {"natural_length_range", "min_stroke", "max_width_at_full", "min_width_at_full",
                  "h0", "n_range", "L_range", "kind"});
  DesignConstraints c;
  if (j.contains("natural_length_range")) {
    const auto [lo, hi] = get_pair(j, "natural_length_range", source);
    c.natural_length_mm = {lo, hi};
  }
  c.min_stroke_mm = get_number_or(j, "min_stroke", source, 0.0);
  c.max_width_at_full_mm =
      get_number_or(j, "max_width_at_full", source, std::numeric_limits<double>::infinity());
  c.min_width_at_full_mm = get_number_or(j, "min_width_at_full", source, 0.0);
  c.h0_mm = get_number(j, "h0", source);
  if (!j.contains("n_range")) throw InputError(source + ": missing field 'n_range'");
  const json& nr = j.at("n_range");
  if (!nr.is_array() || nr.size() != 2) {
    throw InputError(source + ": field 'n_range' must be [min, max]");
  }
  c.n_range = {get_int(nr[0], "n_range[0]", source), get_int(nr[1], "n_range[1]", source)};
  const auto [lmin, lmax] = get_pair(j, "L_range", source);
  c.beam_length_mm = {lmin, lmax};
  c.kind = get_kind(j, source);
  c.validate();
  return c;
}

json to_json(const DesignResult& r) {
  return {{"spec", to_json(r.spec)},
          {"achieved",
           {{"natural_length_mm", number(r.achieved.natural_length_mm)},
            {"stroke_mm", number(r.achieved.stroke_mm)},
            {"width_at_full_mm", number(r.achieved.width_at_full_mm)}}},
          {"feasible", r.feasible},
          {"margin_mm", number(r.margin_mm)},
          {"binding", r.binding}};
}

json to_json(const MuscleState& s) {
  return {{"p", number(s.p)},
          {"width_mm", number(s.width_mm)},
          {"length_mm", number(s.length_mm)},
          {"contraction_mm", number(s.contraction_mm)},
          {"psi0_deg", number(s.psi0_rad * 180 / std::numbers::pi)}};
}

json to_json(const TendonFit& fit) {
  return {{"model", "exponential"},
          {"a_N", number(fit.a)},
          {"b", number(fit.b)},
          {"eps0", number(fit.eps0)},
          {"rms_residual_N", number(fit.rms_residual)},
          {"iterations", fit.iterations}};
}

json to_json(const WinchFit& fit) {
  return {{"model", "play"},
          {"c", number(fit.params.c)},
          {"r", number(fit.params.r)},
          {"rms_residual_N", number(fit.rms_residual)},
          {"reversals", fit.reversals}};
}

HysteresisParams params_from_json(const json& j, const std::string& source) {
  require_object(j, source);
  if (j.contains("model") && j.at("model") != "play") {
    throw InputError(source + ": unsupported winch model " + j.at("model").dump() +
                     " (supported: \"play\")");
  }
  HysteresisParams params;
  params.c = get_number(j, "c", source);
  params.r = get_number(j, "r", source);
  params.validate();
  return params;
}

}  // namespace wwmtc::cli
