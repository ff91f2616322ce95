#pragma once

#include <cstddef>

#include "casimir/constants.hpp"
#include "casimir/geometry.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Single-cavity expulsion force along x.
struct ForceResult {
  double force = 0.0;               // N, signed
  double abs_error_estimate = 0.0;  // N
  std::size_t evaluations = 0;

  friend bool operator==(const ForceResult&, const ForceResult&) = default;
};

/// L * integral over the wing of local_pressure(r) dr. The y-integral is the
/// exact factor L because the pressure does not depend on y.
///
/// Throws ValidationError for invalid inputs, ConvergenceError (carrying the
/// best estimate) when the subdivision budget runs out, and propagates the
/// kernel's NumericalError subclasses.
ForceResult wing_force(const CavityGeometry& geom, const PhysicalConstants& constants,
                       const QuadratureSettings& settings = {});

/// wing_force with the narrow-end separation replaced by `separation`.
ForceResult wing_force_at_separation(const CavityGeometry& geom, double separation,
                                     const PhysicalConstants& constants,
                                     const QuadratureSettings& settings = {});

}  // namespace casimir
