#pragma once

// Minimal CSV dialect: comma separator, '.' decimal point, mandatory header,
// LF line endings (CRLF accepted on input). No quoting.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cli/io_error.hpp"

namespace wwmtc::cli {

/// Shortest "%.15g" rendering of x; the output precision of every emitted number.
std::string format_number(double x);

/// Rounds x to the 15 significant digits format_number would print.
double round15(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column index by name; throws InputError naming `source` if missing.
  std::size_t column(std::string_view name) const;
  std::string source;
};

/// Reads a numeric CSV. Every name in `required` must appear in the header;
/// other columns are kept but may be ignored by the caller.
CsvTable read_csv(std::istream& in, const std::string& source,
                  const std::vector<std::string>& required);
CsvTable read_csv(const std::filesystem::path& path, const std::vector<std::string>& required);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
  std::size_t width_;
};

/// Opens `path` for binary writing, throwing InputError when that fails.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace wwmtc::cli
