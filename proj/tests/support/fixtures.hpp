#pragma once

// Reference values produced by tests/oracle/fixtures.py (mpmath, 50 digits,
// tanh-sinh quadrature of the integral form of the pressure). Rerun that
// script to regenerate.

namespace casimir::fixtures {

// r = 5e-9, a = 4e-9, R = 1e-8, phi = 0.1
inline constexpr double kTheta1 = 0.93524743262087184822;
// r = 5e-9, a = 4e-9, phi = 0.1
inline constexpr double kTheta2 = 2.5063786547097164284;

// a = 4e-9
inline constexpr double kSeparationR0Phi01 = 3.9800166611121030644e-9;   // r = 0, phi = 0.1
inline constexpr double kSeparationR1e8Phi005 = 4.9933352080481465093e-9;  // r = 1e-8, phi = 0.05

inline constexpr double kA_phi01_18_26 = -0.21896620211863813875;
inline constexpr double kIntegrand_2_01 = -0.29077411169474455579;

// r = 5e-9, a = 4e-9, R = 1e-8, phi = 0.0976
inline constexpr double kPressurePhi00976 = 176821.64107470004043;

// L = 1 m
inline constexpr double kForceR1e8Phi00976 = 0.00032263923045414782485;  // a = 4e-9, R = 1e-8
inline constexpr double kForceReferenceA = 0.00032261258195551933243;        // a = 4e-9, R/a = 2.5, 5.59 deg
inline constexpr double kForceReferenceD = 0.000045693182601477178283;       // separation 1.58 a
inline constexpr double kTotalForceReferenceN2 = 0.00059953198130956148658;  // n = 2, d/a = 1.58
inline constexpr double kQReferenceN2 = 32878.115841547257162;
inline constexpr double kQReferenceAsymptotic = 22555.044390355477488;

}  // namespace casimir::fixtures
