#include "cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace wwmtc::cli {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw InputError(source + ": missing column '" + std::string(name) + "'");
}

CsvTable read_csv(std::istream& in, const std::string& source,
                  const std::vector<std::string>& required) {
  CsvTable table;
  table.source = source;
  std::string line;
  if (!std::getline(in, line)) throw InputError(source + ": empty file, header row required");
  for (auto field : split(line)) table.header.emplace_back(trim(field));
  for (const auto& name : required) table.column(name);

  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (fields.size() != table.header.size()) {
      std::ostringstream msg;
      msg << source << ":" << line_no << ": expected " << table.header.size()
          << " fields, found " << fields.size();
      throw InputError(msg.str());
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const std::string_view f = trim(fields[i]);
      double v = 0.0;
      const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || end != f.data() + f.size() || f.empty() || !std::isfinite(v)) {
        std::ostringstream msg;
        msg << source << ":" << line_no << ": column '" << table.header[i]
            << "' is not a finite number: '" << f << "'";
        throw InputError(msg.str());
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path, const std::vector<std::string>& required) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  return read_csv(in, path.string(), required);
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), width_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != width_) throw std::logic_error("CSV row width mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    out_ << (i ? "," : "") << format_number(values[i]);
  }
  out_ << '\n';
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

}  // namespace wwmtc::cli
