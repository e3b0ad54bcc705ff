#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wwmtc::cli {

/// Runs one command line (without the program name). Returns the process exit
/// code: 0 on success, 2 on bad input or domain errors (one line on `err`),
/// 1 on internal faults.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wwmtc::cli
