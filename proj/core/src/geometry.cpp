#include "casimir/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casimir/error.hpp"
#include "casimir/format.hpp"

namespace casimir {
namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw ValidationError(std::string(name) + " > 0 required (got " +
                          format_double(value) + ")");
  }
}

double checked_acos(double x, const char* which) {
  if (!std::isfinite(x) || x < -1.0 - kAcosClampTolerance ||
      x > 1.0 + kAcosClampTolerance) {
    throw DomainError(std::string(which) + ": arccos argument " +
                      format_double(x) + " outside [-1, 1]");
  }
  return std::acos(std::clamp(x, -1.0, 1.0));
}

}  // namespace

void PhysicalConstants::validate() const {
  require_positive(hbar, "hbar");
  require_positive(c, "c");
}

void CavityGeometry::validate() const {
  require_positive(end_separation, "a");
  require_positive(wing_length, "R");
  require_positive(width, "L");
  if (!std::isfinite(half_angle) || half_angle < 0.0 ||
      half_angle >= kMaxHalfAngle) {
    throw ValidationError("phi must satisfy 0 <= phi < pi/4 rad (45 deg), got " +
                          format_double(half_angle) + " rad");
  }
}

double limit_angle_theta1(double r, const CavityGeometry& geom) {
  const double a = geom.end_separation;
  const double R = geom.wing_length;
  const double sin_phi = std::sin(geom.half_angle);
  const double cos_phi = std::cos(geom.half_angle);
  const double num = -(r + a * sin_phi - R * std::cos(2.0 * geom.half_angle));
  const double dx = a + R * sin_phi + r * sin_phi;
  const double dz = r * cos_phi - R * cos_phi;
  return checked_acos(num / std::hypot(dx, dz), "theta1");
}

double limit_angle_theta2(double r, const CavityGeometry& geom) {
  const double a = geom.end_separation;
  const double sin_phi = std::sin(geom.half_angle);
  const double radicand = a * a + r * r + 2.0 * r * a * sin_phi;
  if (!(radicand > 0.0)) {
    throw DomainError("theta2: a^2 + r^2 + 2 r a sin(phi) must be positive");
  }
  return checked_acos(-(r + a * sin_phi) / std::sqrt(radicand), "theta2");
}

AnglePair limit_angles(double r, const CavityGeometry& geom) {
  return {limit_angle_theta1(r, geom), limit_angle_theta2(r, geom)};
}

double effective_separation(double r, const CavityGeometry& geom, double theta2) {
  const double phi = geom.half_angle;
  const double denom = std::sin(phi - theta2);
  if (std::abs(denom) < 1e-15) {
    throw SingularityError("effective separation: sin(phi - theta2) vanishes at r = " +
                           format_double(r));
  }
  const double s = std::sin(2.0 * phi - theta2) *
                   (geom.end_separation + r * std::sin(phi)) / denom;
  if (!(s > 0.0)) {
    throw NonPositiveSeparationError("effective separation s = " + format_double(s) +
                                     " <= 0 at r = " + format_double(r));
  }
  return s;
}

double closed_form_A(double phi, double theta1, double theta2) noexcept {
  using std::sin;
  const double sum = 90.0 * sin(phi - theta1) - 90.0 * sin(phi - theta2) +
                     60.0 * sin(3.0 * phi - theta2) - 60.0 * sin(3.0 * phi - theta1) +
                     20.0 * sin(5.0 * phi - 3.0 * theta2) -
                     20.0 * sin(5.0 * phi - 3.0 * theta1) +
                     5.0 * sin(7.0 * phi - 3.0 * theta1) -
                     5.0 * sin(7.0 * phi - 3.0 * theta2) +
                     3.0 * sin(9.0 * phi - 5.0 * theta1) -
                     3.0 * sin(9.0 * phi - 5.0 * theta2);
  return sum / 240.0;
}

double pressure_integrand(double theta, double phi) noexcept {
  const double s = std::sin(theta - 2.0 * phi);
  const double s2 = s * s;
  return s2 * s2 * std::cos(theta - phi);
}

double local_pressure(double r, const CavityGeometry& geom,
                      const PhysicalConstants& constants) {
  geom.validate();
  if (!(r >= 0.0 && r <= geom.wing_length)) {
    throw ValidationError("wing coordinate r must satisfy 0 <= r <= R (got " +
                          format_double(r) + ")");
  }
  const AnglePair angles = limit_angles(r, geom);
  const double s = effective_separation(r, geom, angles.theta2);
  const double s2 = s * s;
  return -constants.casimir_coefficient() / (s2 * s2) *
         closed_form_A(geom.half_angle, angles.theta1, angles.theta2);
}

}  // namespace casimir
