#pragma once

#include <numbers>

namespace casimir {

/// Dimensional inputs of the Casimir pressure kernel. Defaults are CODATA 2018.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;  // J s
  double c = 299792458.0;         // m/s

  /// Throws ValidationError unless both constants are finite and positive.
  void validate() const;

  /// hbar c pi^2 / 240, the parallel-plate Casimir coefficient (J m).
  double casimir_coefficient() const noexcept {
    return hbar * c * std::numbers::pi * std::numbers::pi / 240.0;
  }
};

constexpr double degrees_to_radians(double deg) noexcept {
  return deg * (std::numbers::pi / 180.0);
}

constexpr double radians_to_degrees(double rad) noexcept {
  return rad * (180.0 / std::numbers::pi);
}

}  // namespace casimir
