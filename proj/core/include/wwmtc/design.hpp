#pragma once

#include <limits>
#include <string>
#include <vector>

#include "wwmtc/muscle.hpp"

namespace wwmtc {

struct Interval {
  double min = 0.0;
  double max = std::numeric_limits<double>::infinity();
};

struct IntInterval {
  int min = 1;
  int max = 1;
};

/// Requirements on a muscle evaluated at p_cap. Unset bounds are open.
struct DesignConstraints {
  Interval natural_length_mm;
  double min_stroke_mm = 0.0;
  double max_width_at_full_mm = std::numeric_limits<double>::infinity();
  double min_width_at_full_mm = 0.0;
  double h0_mm = 0.0;
  IntInterval n_range;
  Interval beam_length_mm{0.0, 0.0};
  MuscleKind kind = MuscleKind::radial;

  /// Throws DomainError on empty, negative, or non-finite ranges.
  void validate() const;
};

struct DesignMetrics {
  double natural_length_mm = 0.0;
  double stroke_mm = 0.0;         ///< contraction at p_cap
  double width_at_full_mm = 0.0;  ///< width at p_cap
};

struct DesignResult {
  MuscleSpec spec;
  DesignMetrics achieved;
  bool feasible = false;
  double margin_mm = 0.0;     ///< smallest constraint slack, negative if violated
  std::string binding;        ///< name of the constraint with the smallest slack
};

struct DesignReport {
  std::vector<DesignResult> results;     ///< feasible, sorted by width_at_full ascending
  std::vector<DesignResult> infeasible;  ///< best candidate per n without a feasible L
  double grid_step_mm = 0.0;
  /// Per-n slack bound (grid step times the sampled Lipschitz constant of the
  /// margin in L). Any L with at least this slack has a feasible grid neighbour.
  std::vector<double> margin_bound_mm;
};

/// Forward evaluation of one design through the muscle model.
DesignMetrics evaluate_design(const MuscleSpec& spec, ShapeParam p_cap);

/// Smallest slack over all constraints, and which one binds.
double design_margin(const DesignConstraints& constraints, const DesignMetrics& metrics,
                     std::string* binding = nullptr);

/// Slack accepted for designs found by margin maximisation.
inline constexpr double kDesignTolerance = 1e-9;

/// Scans L on a 201-point grid for every n, bisects each feasibility boundary
/// and maximises the margin around grid-local peaks so that feasible sets
/// thinner than a grid step are still found. Deterministic; n values are
/// evaluated concurrently and merged in order.
DesignReport search(const DesignConstraints& constraints,
                    ShapeParam p_cap = ShapeParam(kDefaultPCap));

}  // namespace wwmtc
