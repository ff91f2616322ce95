#include "casimir/periodic.hpp"

#include <cmath>

#include "casimir/error.hpp"
#include "casimir/format.hpp"

namespace casimir {

void PeriodicStructure::validate() const {
  geometry.validate();
  if (!std::isfinite(gap) || !(gap > 0.0)) {
    throw ValidationError("d > 0 required (got " + format_double(gap) + ")");
  }
}

double compose_total_force(std::uint64_t n, double per_cavity_force,
                           double gap_force) noexcept {
  return per_cavity_force +
         static_cast<double>(n - 1) * (per_cavity_force - gap_force);
}

double structure_length(const CavityGeometry& geom, double gap, std::uint64_t n) noexcept {
  const double cavity = geom.end_separation + 2.0 * geom.wing_length * std::tan(geom.half_angle);
  return static_cast<double>(n) * cavity + static_cast<double>(n - 1) * gap;
}

double period_length(const CavityGeometry& geom, double gap) noexcept {
  return geom.end_separation + 2.0 * geom.wing_length * std::tan(geom.half_angle) + gap;
}

namespace {

double checked_ratio(double force, double length) {
  if (!(length > 0.0)) {
    throw DegenerateDenominatorError("structure length " + format_double(length) +
                                     " m is not positive");
  }
  return force / length;
}

void require_finite_count(const PeriodicStructure& s) {
  if (s.count.is_asymptotic()) {
    throw ValidationError("finite n >= 1 required; use asymptotic_effectiveness for n = inf");
  }
}

}  // namespace

double compose_effectiveness(const CavityGeometry& geom, double gap, std::uint64_t n,
                             double per_cavity_force, double gap_force) {
  return checked_ratio(compose_total_force(n, per_cavity_force, gap_force),
                       structure_length(geom, gap, n));
}

double compose_asymptotic_effectiveness(const CavityGeometry& geom, double gap,
                                        double per_cavity_force, double gap_force) {
  return checked_ratio(per_cavity_force - gap_force, period_length(geom, gap));
}

StructureResult total_force(const PeriodicStructure& structure,
                            const PhysicalConstants& constants,
                            const QuadratureSettings& settings) {
  structure.validate();
  require_finite_count(structure);
  const std::uint64_t n = structure.count.value();

  StructureResult out;
  out.per_cavity = wing_force(structure.geometry, constants, settings);
  out.gap = wing_force_at_separation(structure.geometry, structure.gap, constants, settings);
  out.total_force = compose_total_force(n, out.per_cavity.force, out.gap.force);
  out.effectiveness = compose_effectiveness(structure.geometry, structure.gap, n,
                                            out.per_cavity.force, out.gap.force);
  return out;
}

double effectiveness(const PeriodicStructure& structure, const PhysicalConstants& constants,
                     const QuadratureSettings& settings) {
  return total_force(structure, constants, settings).effectiveness;
}

double asymptotic_effectiveness(const PeriodicStructure& structure,
                                const PhysicalConstants& constants,
                                const QuadratureSettings& settings) {
  structure.validate();
  const ForceResult fa = wing_force(structure.geometry, constants, settings);
  const ForceResult fd =
      wing_force_at_separation(structure.geometry, structure.gap, constants, settings);
  return compose_asymptotic_effectiveness(structure.geometry, structure.gap, fa.force,
                                          fd.force);
}

}  // namespace casimir
