#pragma once

#include <numbers>

#include "casimir/constants.hpp"

namespace casimir {

/// Upper (exclusive) bound of the validated half-opening angle.
inline constexpr double kMaxHalfAngle = std::numbers::pi / 4.0;

/// arccos arguments within this distance outside [-1, 1] are clamped.
inline constexpr double kAcosClampTolerance = 1e-12;

/// One symmetric trapezoid cavity. All lengths in meters, angle in radians.
///
/// Two mirror wings of length `wing_length` sit `end_separation` apart at
/// their narrow ends and each is tilted outward by `half_angle`. The cavity
/// extends `width` along y; the pressure does not depend on y.
struct CavityGeometry {
  double end_separation = 0.0;  // a
  double wing_length = 0.0;     // R
  double width = 1.0;           // L
  double half_angle = 0.0;      // phi

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;

  /// Same cavity with only the narrow-end separation replaced.
  CavityGeometry with_separation(double separation) const noexcept {
    CavityGeometry g = *this;
    g.end_separation = separation;
    return g;
  }

  friend bool operator==(const CavityGeometry&, const CavityGeometry&) = default;
};

/// Angular bounds of the rays from a wing point to the ends of the opposite wing.
struct AnglePair {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/// Lower limit angle: the ray to the far (wide) end of the opposite wing.
/// `r` is the distance along the wing from its narrow end, 0 <= r <= R.
double limit_angle_theta1(double r, const CavityGeometry& geom);

/// Upper limit angle: the ray to the near (narrow) end of the opposite wing.
double limit_angle_theta2(double r, const CavityGeometry& geom);

AnglePair limit_angles(double r, const CavityGeometry& geom);

/// Effective plate separation s entering the 1/s^4 kernel at wing point r.
/// Throws SingularityError when sin(phi - theta2) vanishes and
/// NonPositiveSeparationError when s <= 0.
double effective_separation(double r, const CavityGeometry& geom, double theta2);

/// Closed-form value of the angular integral of pressure_integrand from
/// theta1 to theta2. Antisymmetric in (theta1, theta2).
double closed_form_A(double phi, double theta1, double theta2) noexcept;

/// sin^4(theta - 2 phi) cos(theta - phi).
double pressure_integrand(double theta, double phi) noexcept;

/// x-component of the local expulsion pressure at wing point r (N/m^2),
/// -(hbar c pi^2 / 240 s^4) A(phi, theta1, theta2).
double local_pressure(double r, const CavityGeometry& geom,
                      const PhysicalConstants& constants);

}  // namespace casimir
