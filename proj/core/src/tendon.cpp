#include "wwmtc/tendon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "wwmtc/errors.hpp"

namespace wwmtc {

namespace {

struct Point {
  double offset_strain;  // strain - eps0
  double load;
};

double model(double a, double b, double x) { return x > 0.0 ? a * std::expm1(b * x) : 0.0; }

double cost(std::span<const Point> pts, double a, double b) {
  double sum = 0.0;
  for (const Point& pt : pts) {
    const double r = model(a, b, pt.offset_strain) - pt.load;
    sum += r * r;
  }
  return std::isfinite(sum) ? sum : std::numeric_limits<double>::infinity();
}

void check_samples(std::span<const TendonSample> data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    const TendonSample& s = data[i];
    std::ostringstream msg;
    if (!(s.strain >= 0.0 && s.strain <= 0.5)) {
      msg << "tendon sample " << i << ": strain " << s.strain << " outside [0, 0.5]";
    } else if (!(s.load_n >= 0.0) || !std::isfinite(s.load_n)) {
      msg << "tendon sample " << i << ": load " << s.load_n << " N must be nonnegative";
    } else {
      continue;
    }
    throw DomainError(msg.str());
  }
}

}  // namespace

TendonFit fit_tendon(std::span<const TendonSample> data, const TendonFitOptions& options) {
  if (data.size() < 10) {
    throw InsufficientDataError("tendon fit needs at least 10 samples, got " +
                                std::to_string(data.size()));
  }
  check_samples(data);

  const int first_cycle =
      std::min_element(data.begin(), data.end(), [](const auto& l, const auto& r) {
        return l.cycle < r.cycle;
      })->cycle;

  // Bedding-in offset: where the first cycle ends, in log order.
  double eps0 = 0.0;
  for (const TendonSample& s : data) {
    if (s.cycle == first_cycle) eps0 = s.strain;
  }

  std::vector<Point> pts;
  double max_load = 0.0;
  for (const TendonSample& s : data) {
    if (s.cycle == first_cycle) continue;
    pts.push_back({s.strain - eps0, s.load_n});
    max_load = std::max(max_load, s.load_n);
  }
  if (pts.size() < 3) {
    throw InsufficientDataError("tendon fit needs at least 3 samples after the first cycle, got " +
                                std::to_string(pts.size()));
  }
  if (!(max_load > 0.0)) {
    throw InsufficientDataError("tendon fit needs a nonzero load after the first cycle");
  }

  // Damped Gauss-Newton in (ln a, ln b) keeps both parameters positive.
  double log_a = std::log(max_load);
  double log_b = std::log(options.initial_b);
  double a = max_load;
  double b = options.initial_b;
  double current = cost(pts, a, b);
  double damping = options.initial_damping;

  auto finish = [&](int iterations) {
    TendonFit fit;
    fit.model = options.model;
    fit.a = a;
    fit.b = b;
    fit.eps0 = eps0;
    fit.rms_residual = std::sqrt(current / static_cast<double>(pts.size()));
    fit.iterations = iterations;
    return fit;
  };

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    double jaa = 0, jab = 0, jbb = 0, ga = 0, gb = 0;
    for (const Point& pt : pts) {
      const double x = pt.offset_strain;
      if (x <= 0.0) continue;
      const double e = std::exp(b * x);
      const double r = a * (e - 1) - pt.load;
      const double da = a * (e - 1);
      const double db = a * b * x * e;
      jaa += da * da;
      jab += da * db;
      jbb += db * db;
      ga += da * r;
      gb += db * r;
    }
    if (current == 0.0 || (ga == 0.0 && gb == 0.0)) return finish(iter);

    bool accepted = false;
    while (!accepted) {
      const double m00 = jaa * (1 + damping) + std::numeric_limits<double>::min();
      const double m11 = jbb * (1 + damping) + std::numeric_limits<double>::min();
      const double det = m00 * m11 - jab * jab;
      const double step_a = (-ga * m11 + gb * jab) / det;
      const double step_b = (-gb * m00 + ga * jab) / det;
      const double trial_a = std::exp(log_a + step_a);
      const double trial_b = std::exp(log_b + step_b);
      const double trial = std::isfinite(step_a) && std::isfinite(step_b)
                               ? cost(pts, trial_a, trial_b)
                               : std::numeric_limits<double>::infinity();
      if (trial < current) {
        const double decrease = (current - trial) / current;
        log_a += step_a;
        log_b += step_b;
        a = trial_a;
        b = trial_b;
        current = trial;
        damping = std::max(damping * options.damping_down, 1e-15);
        accepted = true;
        const double step = std::max(std::abs(step_a), std::abs(step_b));
        if (step < options.step_tolerance || decrease < options.cost_tolerance) {
          return finish(iter);
        }
      } else {
        damping *= options.damping_up;
        // No descent direction left at machine precision.
        if (damping > options.max_damping) return finish(iter);
      }
    }
  }

  std::ostringstream msg;
  msg.precision(15);
  const double rms = std::sqrt(current / static_cast<double>(pts.size()));
  msg << "tendon fit did not converge in " << options.max_iterations
      << " iterations; best RMS residual " << rms << " N";
  throw NonConvergenceError(msg.str(), rms);
}

double tendon_load(const TendonFit& fit, double strain) {
  if (!(strain >= 0.0)) {
    std::ostringstream msg;
    msg << "strain " << strain << " must be nonnegative";
    throw DomainError(msg.str());
  }
  return model(fit.a, fit.b, strain - fit.eps0);
}

}  // namespace wwmtc
