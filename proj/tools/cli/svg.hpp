#pragma once

// Line plots as standalone SVG. Output depends only on the input values, so
// identical data gives byte-identical files.

#include <filesystem>
#include <string>
#include <vector>

namespace wwmtc::cli {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct Plot {
  std::string title;
  std::string x_label;  // include the unit, e.g. "length [mm]"
  std::string y_label;
  std::vector<Series> series;
  int width = 800;
  int height = 600;
};

/// Throws InputError if a series has fewer than 2 points or mismatched sizes.
std::string render_svg(const Plot& plot);
void write_svg(const Plot& plot, const std::filesystem::path& path);

}  // namespace wwmtc::cli
