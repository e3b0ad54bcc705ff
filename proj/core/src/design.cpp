#include "wwmtc/design.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "wwmtc/errors.hpp"

namespace wwmtc {

namespace {

constexpr int kGridIntervals = 200;

bool valid_interval(const Interval& iv) {
  return iv.min >= 0.0 && std::isfinite(iv.min) && iv.max >= iv.min && !std::isnan(iv.max);
}

struct Slack {
  const char* name;
  double value;
};

std::array<Slack, 5> slacks(const DesignConstraints& c, const DesignMetrics& m) {
  return {{
      {"natural_length_range.min", m.natural_length_mm - c.natural_length_mm.min},
      {"natural_length_range.max", c.natural_length_mm.max - m.natural_length_mm},
      {"min_stroke", m.stroke_mm - c.min_stroke_mm},
      {"max_width_at_full", c.max_width_at_full_mm - m.width_at_full_mm},
      {"min_width_at_full", m.width_at_full_mm - c.min_width_at_full_mm},
  }};
}

struct Candidate {
  double beam_length;
  DesignMetrics metrics;
  double margin;
  std::string binding;
};

struct PerN {
  std::vector<DesignResult> feasible;
  DesignResult best;
  double margin_bound = 0.0;
};

class NScan {
 public:
  NScan(const DesignConstraints& c, int n, ShapeParam p_cap) : c_(c), n_(n), p_cap_(p_cap) {}

  Candidate eval(double beam_length) const {
    Candidate cand;
    cand.beam_length = beam_length;
    cand.metrics = evaluate_design(spec(beam_length), p_cap_);
    cand.margin = design_margin(c_, cand.metrics, &cand.binding);
    return cand;
  }

  MuscleSpec spec(double beam_length) const {
    return MuscleSpec{n_, beam_length, c_.h0_mm, c_.kind};
  }

  DesignResult to_result(const Candidate& cand, bool feasible) const {
    return DesignResult{spec(cand.beam_length), cand.metrics, feasible, cand.margin,
                        cand.binding};
  }

  // Boundary between a feasible and an infeasible L, returned on the feasible side.
  Candidate bisect(Candidate inside, Candidate outside) const {
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = inside.beam_length + (outside.beam_length - inside.beam_length) / 2;
      if (mid == inside.beam_length || mid == outside.beam_length) break;
      Candidate m = eval(mid);
      (m.margin >= 0.0 ? inside : outside) = std::move(m);
    }
    return inside;
  }

  // Golden-section maximisation of the margin on [lo, hi].
  Candidate peak(double lo, double hi) const {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    Candidate x1 = eval(hi - inv_phi * (hi - lo));
    Candidate x2 = eval(lo + inv_phi * (hi - lo));
    for (int iter = 0; iter < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++iter) {
      if (x1.margin < x2.margin) {
        lo = x1.beam_length;
        x1 = std::move(x2);
        x2 = eval(lo + inv_phi * (hi - lo));
      } else {
        hi = x2.beam_length;
        x2 = std::move(x1);
        x1 = eval(hi - inv_phi * (hi - lo));
      }
    }
    return x1.margin >= x2.margin ? x1 : x2;
  }

  PerN run() const {
    const double lo = c_.beam_length_mm.min;
    const double hi = c_.beam_length_mm.max;
    const int intervals = hi > lo ? kGridIntervals : 0;
    const double step = intervals > 0 ? (hi - lo) / intervals : 0.0;

    std::vector<Candidate> grid;
    grid.reserve(static_cast<std::size_t>(intervals) + 1);
    for (int i = 0; i <= intervals; ++i) {
      grid.push_back(eval(i == intervals ? hi : lo + step * i));
    }

    PerN out;
    double lipschitz = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const auto a = slacks(c_, grid[i].metrics);
      const auto b = slacks(c_, grid[i + 1].metrics);
      const double dl = grid[i + 1].beam_length - grid[i].beam_length;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::isfinite(a[j].value) && std::isfinite(b[j].value)) {
          lipschitz = std::max(lipschitz, std::abs(b[j].value - a[j].value) / dl);
        }
      }
    }
    out.margin_bound = lipschitz * step;

    std::vector<Candidate> found;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i].margin >= 0.0) found.push_back(grid[i]);
      if (i + 1 < grid.size() && (grid[i].margin >= 0.0) != (grid[i + 1].margin >= 0.0)) {
        found.push_back(grid[i].margin >= 0.0 ? bisect(grid[i], grid[i + 1])
                                              : bisect(grid[i + 1], grid[i]));
      }
    }

    // Feasible slivers narrower than a grid step sit next to a local peak of
    // the margin with every grid point infeasible.
    for (std::size_t i = 0; i < grid.size() && intervals > 0; ++i) {
      const double m = grid[i].margin;
      if (m >= 0.0 || m < -out.margin_bound) continue;
      const bool left_ok = i == 0 || grid[i - 1].margin <= m;
      const bool right_ok = i + 1 == grid.size() || grid[i + 1].margin <= m;
      if (!left_ok || !right_ok) continue;
      const double a = grid[i == 0 ? 0 : i - 1].beam_length;
      const double b = grid[std::min(i + 1, grid.size() - 1)].beam_length;
      Candidate best = peak(a, b);
      if (best.margin >= -kDesignTolerance) found.push_back(std::move(best));
    }

    std::sort(found.begin(), found.end(),
              [](const Candidate& l, const Candidate& r) { return l.beam_length < r.beam_length; });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const Candidate& l, const Candidate& r) {
                              return l.beam_length == r.beam_length;
                            }),
                found.end());
    for (const Candidate& cand : found) out.feasible.push_back(to_result(cand, true));

    const auto best = std::max_element(grid.begin(), grid.end(), [](const auto& l, const auto& r) {
      return l.margin < r.margin;
    });
    out.best = to_result(*best, false);
    return out;
  }

 private:
  const DesignConstraints& c_;
  int n_;
  ShapeParam p_cap_;
};

}  // namespace

void DesignConstraints::validate() const {
  std::ostringstream msg;
  if (!valid_interval(natural_length_mm)) {
    msg << "natural_length_range must satisfy 0 <= min <= max";
  } else if (!(min_stroke_mm >= 0.0) || !std::isfinite(min_stroke_mm)) {
    msg << "min_stroke must be nonnegative";
  } else if (!(min_width_at_full_mm >= 0.0) || !std::isfinite(min_width_at_full_mm) ||
             !(max_width_at_full_mm >= min_width_at_full_mm)) {
    msg << "width bounds must satisfy 0 <= min_width_at_full <= max_width_at_full";
  } else if (!(h0_mm >= 0.0) || !std::isfinite(h0_mm)) {
    msg << "h0 must be nonnegative";
  } else if (n_range.min < 1 || n_range.max < n_range.min) {
    msg << "n_range must satisfy 1 <= min <= max";
  } else if (!(beam_length_mm.min > 0.0) || !std::isfinite(beam_length_mm.max) ||
             !(beam_length_mm.max >= beam_length_mm.min)) {
    msg << "L_range must satisfy 0 < min <= max < inf";
  } else {
    return;
  }
  throw DomainError(msg.str());
}

DesignMetrics evaluate_design(const MuscleSpec& spec, ShapeParam p_cap) {
  const MuscleState full = state_at(spec, p_cap);
  return DesignMetrics{natural_length(spec), full.contraction_mm, full.width_mm};
}

double design_margin(const DesignConstraints& constraints, const DesignMetrics& metrics,
                     std::string* binding) {
  const auto all = slacks(constraints, metrics);
  const auto worst = std::min_element(all.begin(), all.end(), [](const Slack& l, const Slack& r) {
    return l.value < r.value;
  });
  if (binding != nullptr) *binding = worst->name;
  return worst->value;
}

DesignReport search(const DesignConstraints& constraints, ShapeParam p_cap) {
  constraints.validate();
  const int count = constraints.n_range.max - constraints.n_range.min + 1;
  std::vector<PerN> per_n(static_cast<std::size_t>(count));

  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        per_n[static_cast<std::size_t>(i)] =
            NScan(constraints, constraints.n_range.min + i, p_cap).run();
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const int threads =
      std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::min(count, 8));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  DesignReport report;
  report.grid_step_mm = (constraints.beam_length_mm.max - constraints.beam_length_mm.min) /
                        kGridIntervals;
  for (PerN& entry : per_n) {
    report.margin_bound_mm.push_back(entry.margin_bound);
    if (entry.feasible.empty()) {
      report.infeasible.push_back(std::move(entry.best));
    } else {
      for (DesignResult& r : entry.feasible) report.results.push_back(std::move(r));
    }
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const DesignResult& l, const DesignResult& r) {
                     if (l.achieved.width_at_full_mm != r.achieved.width_at_full_mm) {
                       return l.achieved.width_at_full_mm < r.achieved.width_at_full_mm;
                     }
                     if (l.spec.n != r.spec.n) return l.spec.n < r.spec.n;
                     return l.spec.beam_length_mm < r.spec.beam_length_mm;
                   });
  return report;
}

}  // namespace wwmtc
