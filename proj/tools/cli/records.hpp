#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wwmtc/muscle.hpp"
#include "wwmtc/tendon.hpp"
#include "wwmtc/winch.hpp"

namespace wwmtc::cli {

/// Header: p,width_mm,length_mm,contraction_mm,psi0_deg
void write_curve_csv(std::ostream& out, const DeformationCurve& curve);
DeformationCurve read_curve_csv(std::istream& in, const MuscleSpec& spec,
                                const std::string& source);

/// Header: time_s,load_N,strain,cycle
std::vector<TendonSample> read_tendon_csv(const std::filesystem::path& path);

/// Header: time_s,current_A,tension_N
std::vector<WinchSample> read_winch_csv(const std::filesystem::path& path);

/// Header includes time_s,current_A; further columns are ignored.
struct CurrentProfile {
  std::vector<double> time_s;
  std::vector<double> current_a;
};
CurrentProfile read_profile_csv(const std::filesystem::path& path);

}  // namespace wwmtc::cli
