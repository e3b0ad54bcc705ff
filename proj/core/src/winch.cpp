#include "wwmtc/winch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wwmtc/errors.hpp"

namespace wwmtc {

void HysteresisParams::validate() const {
  std::ostringstream msg;
  if (!(c > 0.0) || !std::isfinite(c)) {
    msg << "winch gain c=" << c << " N/A must be positive";
  } else if (!(r >= 0.0) || !std::isfinite(r)) {
    msg << "winch friction band r=" << r << " N must be nonnegative";
  } else {
    return;
  }
  throw DomainError(msg.str());
}

std::vector<double> simulate_winch(const HysteresisParams& params,
                                   std::span<const double> current, double initial_tension) {
  params.validate();
  if (current.empty()) throw DomainError("winch current series is empty");
  std::vector<double> tension;
  tension.reserve(current.size());
  double state = initial_tension;
  for (const double i : current) {
    const double target = params.c * i;
    state = std::clamp(state, target - params.r, target + params.r);
    tension.push_back(state);
  }
  return tension;
}

double play_loop_area(const HysteresisParams& params, double amplitude_a) {
  params.validate();
  const double excess = params.c * std::abs(amplitude_a) - params.r;
  return excess > 0.0 ? 4 * params.r * excess / params.c : 0.0;
}

namespace {

struct Run {
  std::size_t begin;  // index of the reversal sample
  std::size_t end;    // one past the last sample of the run
  int direction;      // +1 rising, -1 falling
};

std::vector<Run> monotone_runs(std::span<const WinchSample> data) {
  std::vector<Run> runs;
  for (std::size_t k = 1; k < data.size(); ++k) {
    const double step = data[k].current_a - data[k - 1].current_a;
    if (step == 0.0) {
      if (!runs.empty()) runs.back().end = k + 1;
      continue;
    }
    const int dir = step > 0 ? 1 : -1;
    if (runs.empty() || runs.back().direction != dir) {
      runs.push_back({k - 1, k + 1, dir});
    } else {
      runs.back().end = k + 1;
    }
  }
  return runs;
}

struct Line {
  double slope;
  double intercept;
};

}  // namespace

WinchFit fit_winch(std::span<const WinchSample> data) {
  const std::vector<Run> runs = monotone_runs(data);
  if (runs.size() < 2) {
    throw InsufficientDataError("winch fit needs at least one current reversal (up-down sweep)");
  }

  double window = 0.0;
  std::vector<std::size_t> rising, falling, prev_rising, prev_falling;
  HysteresisParams params;
  for (int iter = 0; iter < 100; ++iter) {
    rising.clear();
    falling.clear();
    for (const Run& run : runs) {
      const double start = data[run.begin].current_a;
      for (std::size_t k = run.begin + 1; k < run.end; ++k) {
        if (std::abs(data[k].current_a - start) <= window) continue;
        (run.direction > 0 ? rising : falling).push_back(k);
      }
    }
    if (rising.size() < 2 || falling.empty()) {
      throw InsufficientDataError("winch fit: too few samples on the rising or falling branch");
    }

    double mean_i = 0, mean_t = 0;
    for (const std::size_t k : rising) {
      mean_i += data[k].current_a;
      mean_t += data[k].tension_n;
    }
    mean_i /= static_cast<double>(rising.size());
    mean_t /= static_cast<double>(rising.size());
    double sxx = 0, sxy = 0;
    double lo = data[rising.front()].current_a, hi = lo;
    for (const std::size_t k : rising) {
      const double di = data[k].current_a - mean_i;
      sxx += di * di;
      sxy += di * (data[k].tension_n - mean_t);
      lo = std::min(lo, data[k].current_a);
      hi = std::max(hi, data[k].current_a);
    }
    if (!(sxx > 0.0)) {
      throw InsufficientDataError("winch fit: rising branch spans no current range");
    }
    const Line up{sxy / sxx, mean_t - sxy / sxx * mean_i};
    if (!(up.slope > 0.0)) {
      throw InsufficientDataError("winch fit: tension does not rise with current");
    }

    double gap = 0.0;
    std::size_t count = 0;
    for (const std::size_t k : falling) {
      const double i = data[k].current_a;
      if (i < lo || i > hi) continue;
      gap += data[k].tension_n - (up.slope * i + up.intercept);
      ++count;
    }
    if (count == 0) {
      throw InsufficientDataError("winch fit: rising and falling branches share no currents");
    }
    params.c = up.slope;
    params.r = std::max(0.0, gap / static_cast<double>(count) / 2);

    if (iter > 0 && rising == prev_rising && falling == prev_falling) break;
    prev_rising = rising;
    prev_falling = falling;
    // Stuck section after a reversal spans 2r/c of current; keep a 10% margin.
    window = 1.1 * 2 * params.r / params.c;
  }

  WinchFit fit;
  fit.params = params;
  fit.reversals = static_cast<int>(runs.size()) - 1;
  std::vector<double> current(data.size());
  std::transform(data.begin(), data.end(), current.begin(),
                 [](const WinchSample& s) { return s.current_a; });
  const std::vector<double> sim = simulate_winch(params, current, data.front().tension_n);
  double sum = 0.0;
  for (std::size_t k = 0; k < data.size(); ++k) {
    const double d = sim[k] - data[k].tension_n;
    sum += d * d;
  }
  fit.rms_residual = std::sqrt(sum / static_cast<double>(data.size()));
  return fit;
}

}  // namespace wwmtc
