#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "wwmtc/elastica.hpp"
#include "wwmtc/elliptic.hpp"
#include "wwmtc/errors.hpp"

namespace {

using namespace wwmtc;
using oracle::rel_diff;

TEST(ShapeParam, Range) {
  EXPECT_NO_THROW(ShapeParam{kStraightP});
  EXPECT_NO_THROW(ShapeParam{M_SQRT1_2});
  EXPECT_NO_THROW(ShapeParam{kMaxP});
  EXPECT_THROW(ShapeParam{0.7}, DomainError);
  EXPECT_THROW(ShapeParam{1.0}, DomainError);
  EXPECT_THROW(ShapeParam{1.2}, DomainError);
  EXPECT_THROW(ShapeParam{std::nan("")}, DomainError);
}

TEST(SolveBeam, StraightBeamLimit) {
  // At p = 1/sqrt(2) the load vanishes: the beam lies straight along the clamp.
  const BeamSolution s = solve_beam({27.0}, ShapeParam::straight());
  EXPECT_EQ(s.w, 27.0);
  EXPECT_EQ(s.h, 0.0);
  EXPECT_EQ(s.psi0, 0.0);
  EXPECT_EQ(s.k, 0.0);
}

TEST(SolveBeam, MatchesOdeOracleAtPointEightFive) {
  const double p = 0.85;
  const BeamSolution s = solve_beam({27.0}, ShapeParam(p));
  const oracle::ElasticaTip tip = oracle::elastica_shooting(27.0, std::asin(2 * p * p - 1));
  EXPECT_LE(rel_diff(s.w, tip.w), 1e-6);
  EXPECT_LE(rel_diff(s.h, tip.h), 1e-6);
  // k^2 is the load per bending stiffness the shooting converged to.
  EXPECT_LE(rel_diff(s.k * s.k, tip.load), 1e-6);
}

TEST(SolveBeam, MatchesOdeOracleAtPointSevenFive) {
  const BeamSolution s = solve_beam({35.0}, ShapeParam(0.75));
  EXPECT_DOUBLE_EQ(s.psi0, std::asin(0.125));
  const oracle::ElasticaTip tip = oracle::elastica_shooting(35.0, std::asin(0.125));
  EXPECT_LE(rel_diff(s.w, tip.w), 1e-6);
  EXPECT_LE(rel_diff(s.h, tip.h), 1e-6);
}

TEST(SolveBeam, ClosedFormIdentities) {
  for (int i = 1; i <= 50; ++i) {
    const double p = kStraightP + (kMaxP - kStraightP) * i / 50;
    const BeamSolution s = solve_beam({27.0}, ShapeParam(p));
    EXPECT_NEAR(std::sin(s.psi0), 2 * p * p - 1, 1e-12);
    const double kl = elliptic::ellip_k(p) - elliptic::ellip_f(s.phi1, p);
    EXPECT_NEAR(s.k * 27.0, kl, 1e-12) << "p=" << p;
    const double h = (kl - 2 * elliptic::ellip_e_complete(p) + 2 * elliptic::ellip_e(s.phi1, p)) /
                     s.k;
    EXPECT_NEAR(s.h, h, 1e-9 * 27.0) << "p=" << p;
    EXPECT_NEAR(s.w, std::sqrt(2 * (2 * p * p - 1)) / s.k, 1e-9 * 27.0);
    EXPECT_NEAR(s.phi1, std::asin(1 / (std::numbers::sqrt2 * p)), 1e-12);
    EXPECT_GE(s.w, 0.0);
    EXPECT_LE(s.w, 27.0);
    EXPECT_GE(s.h, 0.0);
    EXPECT_LE(s.h, 27.0);
  }
}

TEST(SolveBeam, ContinuousAcrossStraightBoundary) {
  const double L = 27.0;
  const BeamSolution straight = solve_beam({L}, ShapeParam::straight());
  for (double dp : {1e-15, 1e-13, 1e-11, 1e-9, 1e-8}) {
    const BeamSolution s = solve_beam({L}, ShapeParam(kStraightP + dp));
    EXPECT_LE(std::abs(s.w - straight.w), 1e-6 * L) << dp;
    EXPECT_LE(std::abs(s.h - straight.h), 1e-6 * L) << dp;
  }
}

TEST(SolveBeam, MonotoneShape) {
  // h strictly increases with p; w strictly decreases.
  double prev_h = -1.0, prev_w = 1e300;
  for (int i = 0; i <= 20000; ++i) {
    const double p = kStraightP + (kMaxP - kStraightP) * i / 20000;
    const BeamSolution s = solve_beam({35.0}, ShapeParam(p));
    ASSERT_GT(s.h, prev_h) << "p=" << p;
    ASSERT_LT(s.w, prev_w) << "p=" << p;
    prev_h = s.h;
    prev_w = s.w;
  }
}

TEST(SolveBeam, ScaleEquivariance) {
  for (double p : {0.72, 0.8, 0.9, 0.97}) {
    const BeamSolution base = solve_beam({10.0}, ShapeParam(p));
    for (double c : {0.5, 2.7, 3.5}) {
      const BeamSolution scaled = solve_beam({10.0 * c}, ShapeParam(p));
      EXPECT_LE(rel_diff(scaled.w, c * base.w), 1e-13);
      EXPECT_LE(rel_diff(scaled.h, c * base.h), 1e-13);
      EXPECT_EQ(scaled.psi0, base.psi0);
    }
  }
}

TEST(SolveBeam, RejectsBadLength) {
  EXPECT_THROW(solve_beam({0.0}, ShapeParam(0.8)), DomainError);
  EXPECT_THROW(solve_beam({-1.0}, ShapeParam(0.8)), DomainError);
}

TEST(SolvePForHeight, StraightBeam) {
  EXPECT_EQ(solve_p_for_height({27.0}, 0.0).value(), kStraightP);
}

TEST(SolvePForHeight, RoundTrip) {
  const double h = solve_beam({27.0}, ShapeParam(0.8)).h;
  const ShapeParam p = solve_p_for_height({27.0}, h);
  EXPECT_NEAR(p.value(), 0.8, 1e-9);
  EXPECT_LE(std::abs(solve_beam({27.0}, p).h - h), 1e-9 * 27.0);
}

TEST(SolvePForHeight, DenseScanOracle) {
  // Brute-force scan of p at step 1e-6 for the sample nearest h = 20 mm.
  const double L = 35.0, target = 20.0;
  double best_p = kStraightP, best_err = 1e300;
  for (double p = kStraightP; p <= kMaxP; p += 1e-6) {
    const double err = std::abs(solve_beam({L}, ShapeParam(p)).h - target);
    if (err < best_err) {
      best_err = err;
      best_p = p;
    }
  }
  const ShapeParam p = solve_p_for_height({L}, target);
  EXPECT_NEAR(p.value(), best_p, 1e-6);
  EXPECT_LE(std::abs(solve_beam({L}, p).h - target), 1e-9 * L);
}

TEST(SolvePForHeight, OutOfRangeReportsMaximum) {
  const double h_max = max_height({27.0});
  EXPECT_LT(h_max, 27.0);
  try {
    solve_p_for_height({27.0}, 27.0);
    FAIL() << "expected OutOfRangeError";
  } catch (const OutOfRangeError& e) {
    EXPECT_EQ(e.lo(), 0.0);
    EXPECT_EQ(e.hi(), h_max);
  }
  EXPECT_THROW(solve_p_for_height({27.0}, -1.0), DomainError);
  EXPECT_EQ(solve_p_for_height({27.0}, h_max).value(), kMaxP);
}

}  // namespace
