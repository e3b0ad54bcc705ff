#include "cli/records.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cli/csv.hpp"
#include "cli/io_error.hpp"

namespace wwmtc::cli {

namespace {

constexpr double kDeg = 180 / std::numbers::pi;

}  // namespace

void write_curve_csv(std::ostream& out, const DeformationCurve& curve) {
  CsvWriter csv(out, {"p", "width_mm", "length_mm", "contraction_mm", "psi0_deg"});
  for (const auto& s : curve.samples) {
    csv.row({s.p, s.width_mm, s.length_mm, s.contraction_mm, s.psi0_rad * kDeg});
  }
}

DeformationCurve read_curve_csv(std::istream& in, const MuscleSpec& spec,
                                const std::string& source) {
  const CsvTable t =
      read_csv(in, source, {"p", "width_mm", "length_mm", "contraction_mm", "psi0_deg"});
  const std::size_t ip = t.column("p"), iw = t.column("width_mm"), il = t.column("length_mm"),
                    ic = t.column("contraction_mm"), ia = t.column("psi0_deg");
  DeformationCurve curve{spec, {}};
  for (const auto& row : t.rows) {
    curve.samples.push_back({row[ip], row[iw], row[il], row[ic], row[ia] / kDeg});
  }
  return curve;
}

std::vector<TendonSample> read_tendon_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path, {"time_s", "load_N", "strain", "cycle"});
  const std::size_t it = t.column("time_s"), il = t.column("load_N"), is = t.column("strain"),
                    ic = t.column("cycle");
  std::vector<TendonSample> out;
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    const auto& row = t.rows[k];
    if (row[ic] != std::floor(row[ic]) || std::abs(row[ic]) > 1e9) {
      std::ostringstream msg;
      msg << t.source << ": row " << k + 1 << ": cycle must be an integer";
      throw InputError(msg.str());
    }
    out.push_back({row[it], row[il], row[is], static_cast<int>(row[ic])});
  }
  return out;
}

std::vector<WinchSample> read_winch_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path, {"time_s", "current_A", "tension_N"});
  const std::size_t it = t.column("time_s"), ii = t.column("current_A"),
                    iT = t.column("tension_N");
  std::vector<WinchSample> out;
  for (const auto& row : t.rows) out.push_back({row[it], row[ii], row[iT]});
  return out;
}

CurrentProfile read_profile_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path, {"time_s", "current_A"});
  const std::size_t it = t.column("time_s"), ii = t.column("current_A");
  CurrentProfile out;
  for (const auto& row : t.rows) {
    out.time_s.push_back(row[it]);
    out.current_a.push_back(row[ii]);
  }
  if (out.current_a.empty()) throw InputError(t.source + ": no samples");
  return out;
}

}  // namespace wwmtc::cli
