#include <gtest/gtest.h>

#include <cmath>

#include "casimir/optimize.hpp"

using namespace casimir;

namespace {

const PhysicalConstants kConstants;

SearchProblem reference_problem(CavityCount n, double r_over_a = 2.5) {
  SearchProblem p;
  p.a = 4e-9;
  p.r_over_a = r_over_a;
  p.count = n;
  return p;
}

}  // namespace

TEST(MaximizeQ, ReferenceInstanceNearExpectedOptimum) {
  const OptimizationResult r = maximize_q(reference_problem(CavityCount::finite(2)), kConstants);
  EXPECT_NEAR(radians_to_degrees(r.phi_star), 5.59, 0.3);
  EXPECT_NEAR(r.d_over_a_star, 1.58, 0.1);
  EXPECT_FALSE(r.boundary_maximum);
  EXPECT_EQ(r.grid_resolution, (GridResolution{64, 64}));
  EXPECT_GT(r.refinement_iterations, 0u);
}

TEST(MaximizeQ, RefinementDominatesGrid) {
  for (auto n : {CavityCount::finite(2), CavityCount::finite(7), CavityCount::asymptotic()}) {
    const OptimizationResult r = maximize_q(reference_problem(n), kConstants);
    std::size_t grid_samples = 0;
    for (const auto& s : r.trace) {
      EXPECT_GE(r.q_star, s.q);
      grid_samples += s.stage == SampleStage::grid ? 1 : 0;
    }
    EXPECT_EQ(grid_samples, 64u * 64u);
  }
}

TEST(MaximizeQ, ArgmaxStableUnderTighterSteps) {
  OptimizerSettings coarse;
  OptimizerSettings fine = coarse;
  fine.phi_step_tol /= 2;
  fine.d_over_a_step_tol /= 2;
  const auto p = reference_problem(CavityCount::finite(2));
  const OptimizationResult a = maximize_q(p, kConstants, coarse);
  const OptimizationResult b = maximize_q(p, kConstants, fine);
  EXPECT_LT(std::abs(a.phi_star - b.phi_star), coarse.phi_step_tol);
  EXPECT_LT(std::abs(a.d_over_a_star - b.d_over_a_star), coarse.d_over_a_step_tol);
}

TEST(MaximizeQ, GridMaximumWithinOneCellOfOptimum) {
  const auto p = reference_problem(CavityCount::finite(2));
  const OptimizationResult r = maximize_q(p, kConstants);
  const QSurface s = q_surface(p, {64, 64}, kConstants, OptimizerSettings{}.quadrature);
  const auto [i, j] = s.argmax();
  const double dphi = s.phi_axis[1] - s.phi_axis[0];
  const double ddoa = s.d_over_a_axis[1] - s.d_over_a_axis[0];
  EXPECT_LE(std::abs(s.phi_axis[i] - r.phi_star), dphi);
  EXPECT_LE(std::abs(s.d_over_a_axis[j] - r.d_over_a_star), ddoa);
}

TEST(MaximizeQ, FlagsBoundaryMaximum) {
  auto p = reference_problem(CavityCount::finite(2));
  p.box.phi_max = degrees_to_radians(3.0);
  const OptimizationResult r = maximize_q(p, kConstants);
  EXPECT_TRUE(r.boundary_maximum);
  EXPECT_NEAR(r.phi_star, p.box.phi_max, 1e-12);
}

TEST(MaximizeQ, Deterministic) {
  const auto p = reference_problem(CavityCount::asymptotic());
  const OptimizationResult a = maximize_q(p, kConstants);
  const OptimizationResult b = maximize_q(p, kConstants);
  EXPECT_EQ(a.phi_star, b.phi_star);
  EXPECT_EQ(a.d_over_a_star, b.d_over_a_star);
  EXPECT_EQ(a.q_star, b.q_star);
  EXPECT_EQ(a.trace.size(), b.trace.size());
}

TEST(MaximizeQ, QuadratureFailureAbortsWithPartialTrace) {
  OptimizerSettings s;
  s.grid = {8, 8};
  s.quadrature = {1e-15, 0.0, 1};
  try {
    maximize_q(reference_problem(CavityCount::finite(2)), kConstants, s);
    FAIL() << "expected OptimizationError";
  } catch (const OptimizationError& e) {
    EXPECT_TRUE(e.partial_trace().empty());
    EXPECT_NE(std::string(e.what()).find("grid scan failed"), std::string::npos);
  }
}

TEST(OptimizerSettings, Validation) {
  OptimizerSettings s;
  s.grid = {4, 64};
  EXPECT_THROW(maximize_q(reference_problem(CavityCount::finite(2)), kConstants, s), ValidationError);
  s = {};
  s.phi_step_tol = 0.0;
  EXPECT_THROW(s.validate(), ValidationError);
}
