#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "cli/csv.hpp"
#include "cli/io_error.hpp"

namespace wwmtc::cli {

namespace {

constexpr double kLeft = 80, kRight = 30, kTop = 50, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  if (std::string_view(buf) == "-0.00") return "0.00";
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo, hi, step;
};

// Range widened to whole multiples of a 1/2/5 step giving roughly 5-10 ticks.
Axis nice_axis(double lo, double hi) {
  if (hi - lo <= 0.0) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  }
  const double raw = (hi - lo) / 6;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

std::string tick_label(double v, double step) {
  v = std::round(v / step) * step;
  if (std::abs(v) < step * 1e-9) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string render_svg(const Plot& plot) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  if (plot.series.empty()) throw InputError("plot has no series");
  for (const auto& s : plot.series) {
    if (s.x.size() != s.y.size()) throw InputError("series '" + s.name + "' has mismatched x/y");
    if (s.x.size() < 2) throw InputError("series '" + s.name + "' needs at least 2 samples");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        throw InputError("series '" + s.name + "' has non-finite values");
      }
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  const Axis ax = nice_axis(xmin, xmax);
  const Axis ay = nice_axis(ymin, ymax);
  const double w = plot.width, h = plot.height;
  const double pw = w - kLeft - kRight, ph = h - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - ax.lo) / (ax.hi - ax.lo) * pw; };
  auto sy = [&](double y) { return kTop + ph - (y - ay.lo) / (ay.hi - ay.lo) * ph; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width << "\" height=\""
    << plot.height << "\" viewBox=\"0 0 " << plot.width << ' ' << plot.height << "\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"" << plot.width << "\" height=\"" << plot.height
    << "\" fill=\"white\"/>\n"
    << "<g font-family=\"sans-serif\" font-size=\"12\">\n";

  // grid and ticks
  const int nx = static_cast<int>(std::lround((ax.hi - ax.lo) / ax.step));
  for (int i = 0; i <= nx; ++i) {
    const double v = ax.lo + i * ax.step;
    const std::string x = px(sx(v));
    o << "<line x1=\"" << x << "\" y1=\"" << px(kTop) << "\" x2=\"" << x << "\" y2=\""
      << px(kTop + ph) << "\" stroke=\"#e0e0e0\"/>\n"
      << "<text x=\"" << x << "\" y=\"" << px(kTop + ph + 18) << "\" text-anchor=\"middle\">"
      << tick_label(v, ax.step) << "</text>\n";
  }
  const int ny = static_cast<int>(std::lround((ay.hi - ay.lo) / ay.step));
  for (int i = 0; i <= ny; ++i) {
    const double v = ay.lo + i * ay.step;
    const std::string y = px(sy(v));
    o << "<line x1=\"" << px(kLeft) << "\" y1=\"" << y << "\" x2=\"" << px(kLeft + pw)
      << "\" y2=\"" << y << "\" stroke=\"#e0e0e0\"/>\n"
      << "<text x=\"" << px(kLeft - 8) << "\" y=\"" << px(sy(v) + 4)
      << "\" text-anchor=\"end\">" << tick_label(v, ay.step) << "</text>\n";
  }
  o << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\"" << px(pw)
    << "\" height=\"" << px(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  // labels
  o << "<text x=\"" << px(kLeft + pw / 2) << "\" y=\"" << px(h - 18)
    << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(plot.x_label) << "</text>\n"
    << "<text x=\"" << px(20) << "\" y=\"" << px(kTop + ph / 2)
    << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 " << px(20) << ' '
    << px(kTop + ph / 2) << ")\">" << escape(plot.y_label) << "</text>\n";
  if (!plot.title.empty()) {
    o << "<text x=\"" << px(w / 2) << "\" y=\"" << px(30)
      << "\" text-anchor=\"middle\" font-size=\"16\">" << escape(plot.title) << "</text>\n";
  }

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const Series& s = plot.series[k];
    o << "<polyline fill=\"none\" stroke=\"" << kPalette[k % std::size(kPalette)]
      << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      o << (i ? " " : "") << px(sx(s.x[i])) << ',' << px(sy(s.y[i]));
    }
    o << "\"/>\n";
  }

  // legend, top right, in input order
  const double lx = kLeft + pw - 190, ly = kTop + 10;
  o << "<rect x=\"" << px(lx) << "\" y=\"" << px(ly) << "\" width=\"180\" height=\""
    << px(10 + 18.0 * plot.series.size()) << "\" fill=\"white\" stroke=\"#808080\"/>\n";
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const double y = ly + 14 + 18.0 * k;
    o << "<line x1=\"" << px(lx + 8) << "\" y1=\"" << px(y) << "\" x2=\"" << px(lx + 32)
      << "\" y2=\"" << px(y) << "\" stroke=\"" << kPalette[k % std::size(kPalette)]
      << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << px(lx + 38) << "\" y=\"" << px(y + 4) << "\">"
      << escape(plot.series[k].name) << "</text>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

void write_svg(const Plot& plot, const std::filesystem::path& path) {
  const std::string doc = render_svg(plot);
  auto out = open_output(path);
  out << doc;
  if (!out) throw InputError("cannot write " + path.string());
}

}  // namespace wwmtc::cli
