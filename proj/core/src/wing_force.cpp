#include "casimir/wing_force.hpp"

#include <cmath>

#include "casimir/error.hpp"
#include "casimir/format.hpp"

namespace casimir {

ForceResult wing_force(const CavityGeometry& geom, const PhysicalConstants& constants,
                       const QuadratureSettings& settings) {
  geom.validate();
  constants.validate();
  settings.validate();

  // Integrate per unit width and scale afterwards so L stays an exact factor.
  QuadratureSettings per_width = settings;
  per_width.abs_tol = settings.abs_tol / geom.width;
  const auto pressure = [&](double r) { return local_pressure(r, geom, constants); };
  const QuadratureResult q =
      integrate_adaptive(pressure, 0.0, geom.wing_length, per_width);

  const double force = geom.width * q.value;
  const double error = geom.width * q.abs_error;
  if (!q.converged) {
    throw ConvergenceError("wing force did not converge within " +
                               std::to_string(settings.max_subdivisions) +
                               " subdivisions (estimate " + format_double(force) +
                               " N, error bound " + format_double(error) + " N)",
                           force, error);
  }
  return {force, error, q.evaluations};
}

ForceResult wing_force_at_separation(const CavityGeometry& geom, double separation,
                                     const PhysicalConstants& constants,
                                     const QuadratureSettings& settings) {
  if (!std::isfinite(separation) || !(separation > 0.0)) {
    throw ValidationError("separation > 0 required (got " + format_double(separation) +
                          ")");
  }
  return wing_force(geom.with_separation(separation), constants, settings);
}

}  // namespace casimir
