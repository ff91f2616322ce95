#include <gtest/gtest.h>

#include <cmath>

#include "casimir/error.hpp"
#include "casimir/periodic.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace casimir;

namespace {

const PhysicalConstants kConstants;

PeriodicStructure reference_structure(CavityCount n, double d_over_a = 1.58) {
  const double a = 4e-9;
  return {{a, 2.5 * a, 1.0, degrees_to_radians(5.59)}, d_over_a * a, n};
}

}  // namespace

TEST(TotalForce, StrictPeriodCancels) {
  for (std::uint64_t n : {1ULL, 2ULL, 10ULL, 1'000'000ULL}) {
    const StructureResult r =
        total_force(reference_structure(CavityCount::finite(n), 1.0), kConstants);
    EXPECT_EQ(r.total_force, r.per_cavity_force()) << "n=" << n;
  }
}

TEST(TotalForce, SingleCavityIgnoresGap) {
  for (double k : {1.2, 2.0, 3.0}) {
    const StructureResult r = total_force(reference_structure(CavityCount::finite(1), k), kConstants);
    EXPECT_EQ(r.total_force, r.per_cavity_force());
  }
}

TEST(TotalForce, ReferenceInstanceFixture) {
  const StructureResult r = total_force(reference_structure(CavityCount::finite(2)), kConstants);
  EXPECT_NEAR(r.per_cavity_force(), fixtures::kForceReferenceA, 1e-9 * fixtures::kForceReferenceA);
  EXPECT_NEAR(r.gap_force(), fixtures::kForceReferenceD, 1e-9 * fixtures::kForceReferenceD);
  EXPECT_NEAR(r.total_force, fixtures::kTotalForceReferenceN2, 1e-9 * fixtures::kTotalForceReferenceN2);
  EXPECT_NEAR(r.effectiveness, fixtures::kQReferenceN2, 1e-9 * fixtures::kQReferenceN2);
}

TEST(TotalForce, AffineInCount) {
  const StructureResult base = total_force(reference_structure(CavityCount::finite(1)), kConstants);
  const double step = base.per_cavity_force() - base.gap_force();
  double previous = compose_total_force(1, base.per_cavity_force(), base.gap_force());
  for (std::uint64_t n = 2; n <= 100; ++n) {
    const double f = compose_total_force(n, base.per_cavity_force(), base.gap_force());
    EXPECT_NEAR(f - previous, step, 1e-12 * std::abs(step)) << "n=" << n;
    previous = f;
  }
}

TEST(TotalForce, RepeatedEvaluationIsIdentical) {
  const auto s = reference_structure(CavityCount::finite(3));
  EXPECT_EQ(total_force(s, kConstants), total_force(s, kConstants));
}

TEST(TotalForce, RequiresFiniteCount) {
  EXPECT_THROW(total_force(reference_structure(CavityCount::asymptotic()), kConstants),
               ValidationError);
}

TEST(TotalForce, RejectsNonPositiveGap) {
  auto s = reference_structure(CavityCount::finite(2));
  s.gap = 0.0;
  EXPECT_THROW(total_force(s, kConstants), ValidationError);
}

TEST(Effectiveness, SingleParallelPlateCavity) {
  PeriodicStructure s = reference_structure(CavityCount::finite(1), 2.0);
  s.geometry.half_angle = 0.0;
  const StructureResult r = total_force(s, kConstants);
  EXPECT_DOUBLE_EQ(r.effectiveness, r.per_cavity_force() / s.geometry.end_separation);
}

TEST(Effectiveness, ScalesWithLengthScaleToPowerMinusFour) {
  // Force scales as lambda^-3 and the structure length as lambda.
  PeriodicStructure s = reference_structure(CavityCount::finite(2));
  const double q1 = effectiveness(s, kConstants);
  s.geometry.end_separation *= 2;
  s.geometry.wing_length *= 2;
  s.gap *= 2;
  const double q2 = effectiveness(s, kConstants);
  EXPECT_NEAR(std::log2(q2 / q1), -4.0, 1e-6);
}

TEST(Effectiveness, DegenerateDenominator) {
  const CavityGeometry g{4e-9, 1e-8, 1.0, 0.1};
  EXPECT_THROW(compose_effectiveness(g, -1.0, 2, 1.0, 0.5), DegenerateDenominatorError);
  EXPECT_THROW(compose_asymptotic_effectiveness(g, -1.0, 1.0, 0.5), DegenerateDenominatorError);
}

TEST(AsymptoticEffectiveness, StrictPeriodIsZero) {
  EXPECT_EQ(asymptotic_effectiveness(reference_structure(CavityCount::asymptotic(), 1.0), kConstants),
            0.0);
}

TEST(AsymptoticEffectiveness, ReferenceInstanceFixture) {
  const double q = asymptotic_effectiveness(reference_structure(CavityCount::asymptotic()), kConstants);
  EXPECT_NEAR(q, fixtures::kQReferenceAsymptotic, 1e-9 * fixtures::kQReferenceAsymptotic);
}

TEST(AsymptoticEffectiveness, LargeCountConverges) {
  auto rng = oracle::seeded_rng(11);
  for (int i = 0; i < 5; ++i) {
    const double a = oracle::uniform(rng, 1e-9, 1e-8);
    PeriodicStructure s{{a, a * oracle::uniform(rng, 1.0, 20.0), 1.0,
                         degrees_to_radians(oracle::uniform(rng, 0.5, 15.0))},
                        a * oracle::uniform(rng, 1.2, 3.0), CavityCount::finite(1'000'000)};
    const double finite = effectiveness(s, kConstants);
    const double limit = asymptotic_effectiveness(s, kConstants);
    EXPECT_NEAR(finite, limit, 1e-5 * std::abs(limit));
  }
}
