#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "support/synthetic.hpp"
#include "wwmtc/errors.hpp"
#include "wwmtc/tendon.hpp"
#include "wwmtc/winch.hpp"

namespace {

using namespace wwmtc;
using oracle::rel_diff;

// ---- tendon --------------------------------------------------------------

TEST(TendonFit, NoiselessRecovery) {
  const auto log = synthetic::tendon_log({50.0, 8.0, 0.02});
  const TendonFit fit = fit_tendon(log);
  EXPECT_LE(rel_diff(fit.a, 50.0), 1e-6);
  EXPECT_LE(rel_diff(fit.b, 8.0), 1e-6);
  EXPECT_LE(rel_diff(fit.eps0, 0.02), 1e-12);
  EXPECT_LT(fit.rms_residual, 1e-6);
}

TEST(TendonFit, NoisyRecoveryMostSeeds) {
  int passing = 0;
  for (int seed = 1; seed <= 100; ++seed) {
    const auto log = synthetic::tendon_log({50.0, 8.0, 0.02}, 3, 0.02, seed);
    const TendonFit fit = fit_tendon(log);
    if (rel_diff(fit.a, 50.0) <= 0.05 && rel_diff(fit.b, 8.0) <= 0.05 &&
        rel_diff(fit.eps0, 0.02) <= 0.05) {
      ++passing;
    }
  }
  EXPECT_GE(passing, 95);
}

TEST(TendonFit, BeddingInIsolated) {
  // Two cycles: the first one stretches far beyond the stiffening curve.
  const auto log = synthetic::tendon_log({50.0, 8.0, 0.02}, 1);
  const TendonFit fit = fit_tendon(log);
  EXPECT_DOUBLE_EQ(fit.eps0, 0.02);
  EXPECT_LE(rel_diff(fit.b, 8.0), 1e-6);
  EXPECT_EQ(tendon_load(fit, 0.02), 0.0);
}

TEST(TendonFit, LinearDataDegradesGracefully) {
  std::vector<TendonSample> log;
  for (int i = 0; i < 20; ++i) log.push_back({0.1 * i, 0.0, 0.01 * i, 0});
  log.back().load_n = 0.0;
  for (int i = 0; i < 30; ++i) {
    const double strain = 0.19 + 0.01 * i;
    log.push_back({2.0 + 0.1 * i, 400.0 * (strain - 0.19), strain, 1});
  }
  try {
    const TendonFit fit = fit_tendon(log);
    EXPECT_LT(fit.b, 0.5);
    EXPECT_TRUE(std::isfinite(fit.rms_residual));
    EXPECT_GT(fit.a, 0.0);
  } catch (const NonConvergenceError& e) {
    EXPECT_TRUE(std::isfinite(e.best_residual()));
  }
}

TEST(TendonFit, Deterministic) {
  const auto log = synthetic::tendon_log({50.0, 8.0, 0.02}, 3, 0.02, 42);
  const TendonFit a = fit_tendon(log);
  const TendonFit b = fit_tendon(log);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.b, b.b);
  EXPECT_EQ(a.rms_residual, b.rms_residual);
}

TEST(TendonFit, InputErrors) {
  auto log = synthetic::tendon_log({50.0, 8.0, 0.02});
  EXPECT_THROW(fit_tendon(std::span(log).first(9)), InsufficientDataError);

  auto single_cycle = log;
  for (auto& s : single_cycle) s.cycle = 0;
  EXPECT_THROW(fit_tendon(single_cycle), InsufficientDataError);

  auto bad_strain = log;
  bad_strain[5].strain = 0.6;
  EXPECT_THROW(fit_tendon(bad_strain), DomainError);

  auto bad_load = log;
  bad_load[5].load_n = -1.0;
  EXPECT_THROW(fit_tendon(bad_load), DomainError);
}

TEST(TendonLoad, ForwardModel) {
  const TendonFit fit{TendonModelKind::exponential, 50.0, 8.0, 0.02, 0.0, 0};
  EXPECT_EQ(tendon_load(fit, 0.02), 0.0);
  EXPECT_EQ(tendon_load(fit, 0.0), 0.0);
  EXPECT_EQ(tendon_load(fit, 0.01), 0.0);
  EXPECT_THROW(tendon_load(fit, -0.01), DomainError);
  double prev = 0.0, prev_slope = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double strain = 0.02 + 0.003 * i;
    const double load = tendon_load(fit, strain);
    const double slope = (load - prev) / 0.003;
    EXPECT_GT(load, prev);
    EXPECT_GT(slope, prev_slope);
    prev = load;
    prev_slope = slope;
  }
}

// ---- winch ---------------------------------------------------------------

TEST(SimulateWinch, ZeroBandIsProportional) {
  const std::vector<double> current{0.0, 0.5, 1.5, 0.7, 2.0};
  const auto t = simulate_winch({WinchModelKind::play, 20.0, 0.0}, current);
  ASSERT_EQ(t.size(), current.size());
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_EQ(t[k], 20.0 * current[k]);
}

TEST(SimulateWinch, RampLagsByBand) {
  const HysteresisParams params{WinchModelKind::play, 20.0, 5.0};
  std::vector<double> current;
  for (int i = 0; i <= 100; ++i) current.push_back(0.02 * i);
  const auto t = simulate_winch(params, current);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (20.0 * current[k] > 5.0) {
      EXPECT_DOUBLE_EQ(t[k], 20.0 * current[k] - 5.0);
    } else {
      EXPECT_EQ(t[k], 0.0);  // stuck inside the band
    }
  }
}

TEST(SimulateWinch, InitialStateAtLowerEdgeDelaysRise) {
  const HysteresisParams params{WinchModelKind::play, 20.0, 5.0};
  const std::vector<double> current{0.0, 0.2, 0.4, 0.5, 0.6, 0.7};
  const auto t = simulate_winch(params, current, 5.0);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(t[k], 5.0);
  EXPECT_DOUBLE_EQ(t[4], 20.0 * 0.6 - 5.0);
  EXPECT_DOUBLE_EQ(t[5], 20.0 * 0.7 - 5.0);
}

TEST(SimulateWinch, TriangleLoopArea) {
  const HysteresisParams params{WinchModelKind::play, 20.0, 5.0};
  // One settling period, then one steady period whose first and last points coincide.
  const auto current = synthetic::triangle_current(0.5, 2.5, 2, 2000);
  const auto tension = simulate_winch(params, current);
  const std::size_t start = 2000;
  std::vector<double> x(current.begin() + start, current.end());
  std::vector<double> y(tension.begin() + start, tension.end());
  EXPECT_EQ(x.front(), x.back());
  EXPECT_EQ(y.front(), y.back());
  const double area = std::abs(oracle::shoelace_area(x, y));
  EXPECT_LE(rel_diff(area, play_loop_area(params, 1.0)), 1e-6);
  EXPECT_DOUBLE_EQ(play_loop_area(params, 1.0), 4 * 5.0 * (20.0 * 1.0 - 5.0) / 20.0);
}

TEST(SimulateWinch, LoopAreaSign) {
  EXPECT_EQ(play_loop_area({WinchModelKind::play, 20.0, 0.0}, 1.0), 0.0);
  EXPECT_GT(play_loop_area({WinchModelKind::play, 20.0, 1.0}, 0.051), 0.0);
  EXPECT_EQ(play_loop_area({WinchModelKind::play, 20.0, 1.0}, 0.05), 0.0);
}

TEST(SimulateWinch, RateIndependentUnderResampling) {
  const HysteresisParams params{WinchModelKind::play, 20.0, 5.0};
  const auto coarse = synthetic::triangle_current(0.0, 2.0, 3, 40);
  std::vector<double> fine;
  std::vector<std::size_t> shared;
  for (std::size_t k = 0; k < coarse.size(); ++k) {
    if (k > 0) {
      // Insert monotone intermediate samples between neighbours.
      const double a = coarse[k - 1], b = coarse[k];
      for (int j = 1; j < 5; ++j) {
        const double v = a + (b - a) * j / 5;
        fine.push_back(std::clamp(v, std::min(a, b), std::max(a, b)));
      }
    }
    shared.push_back(fine.size());
    fine.push_back(coarse[k]);
  }
  const auto t_coarse = simulate_winch(params, coarse);
  const auto t_fine = simulate_winch(params, fine);
  for (std::size_t k = 0; k < coarse.size(); ++k) EXPECT_EQ(t_coarse[k], t_fine[shared[k]]);
}

TEST(SimulateWinch, Errors) {
  EXPECT_THROW(simulate_winch({WinchModelKind::play, 20.0, 5.0}, {}), DomainError);
  const std::vector<double> one{1.0};
  EXPECT_THROW(simulate_winch({WinchModelKind::play, 0.0, 5.0}, one), DomainError);
  EXPECT_THROW(simulate_winch({WinchModelKind::play, 1.0, -5.0}, one), DomainError);
}

TEST(FitWinch, NoiselessRecovery) {
  const auto log = synthetic::winch_log({WinchModelKind::play, 20.0, 5.0});
  const WinchFit fit = fit_winch(log);
  EXPECT_LE(rel_diff(fit.params.c, 20.0), 1e-9);
  EXPECT_LE(rel_diff(fit.params.r, 5.0), 1e-9);
  EXPECT_LT(fit.rms_residual, 1e-9);
  EXPECT_EQ(fit.reversals, 5);
}

TEST(FitWinch, NoisyRecoveryMostSeeds) {
  int passing = 0;
  for (int seed = 1; seed <= 100; ++seed) {
    const auto log = synthetic::winch_log({WinchModelKind::play, 20.0, 5.0}, 0.03, seed);
    const WinchFit fit = fit_winch(log);
    if (rel_diff(fit.params.c, 20.0) <= 0.05 && rel_diff(fit.params.r, 5.0) <= 0.05) ++passing;
  }
  EXPECT_GE(passing, 95);
}

TEST(FitWinch, ConstantCurrentHasNoSweep) {
  std::vector<WinchSample> log;
  for (int i = 0; i < 50; ++i) log.push_back({0.01 * i, 1.0, 15.0});
  EXPECT_THROW(fit_winch(log), InsufficientDataError);
}

TEST(FitWinch, MonotoneRampHasNoSweep) {
  std::vector<WinchSample> log;
  for (int i = 0; i < 50; ++i) log.push_back({0.01 * i, 0.05 * i, 1.0 * i});
  EXPECT_THROW(fit_winch(log), InsufficientDataError);
}

}  // namespace
