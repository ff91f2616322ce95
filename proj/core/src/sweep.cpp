#include "casimir/sweep.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "casimir/error.hpp"
#include "casimir/format.hpp"
#include "casimir/parallel.hpp"
#include "casimir/wing_force.hpp"

namespace casimir {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = (i + 1 == n) ? hi : lo + (hi - lo) * static_cast<double>(i) /
                                        static_cast<double>(n - 1);
  }
  return v;
}

}  // namespace

std::string_view to_string(SweepVariable v) noexcept {
  switch (v) {
    case SweepVariable::d_over_a: return "d_over_a";
    case SweepVariable::phi: return "phi";
    case SweepVariable::wing_length: return "r";
  }
  return "?";
}

std::string_view to_string(Observable o) noexcept {
  switch (o) {
    case Observable::abs_total_force: return "abs_total_force";
    case Observable::effectiveness: return "effectiveness";
  }
  return "?";
}

void SweepRange::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw ValidationError("sweep range requires min < max (got " + format_double(min) +
                          ", " + format_double(max) + ")");
  }
  if (steps < 2) throw ValidationError("sweep requires steps >= 2");
}

double SweepRange::at(std::size_t i) const noexcept {
  if (i + 1 == steps) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::vector<double> SweepRange::values() const { return linspace(min, max, steps); }

namespace {

struct SweepPoint {
  CavityGeometry geometry;
  double d_over_a;
};

SweepPoint point_at(const SweepSpec& spec, double x) {
  SweepPoint p{spec.geometry, spec.d_over_a};
  switch (spec.variable) {
    case SweepVariable::d_over_a: p.d_over_a = x; break;
    case SweepVariable::phi: p.geometry.half_angle = x; break;
    case SweepVariable::wing_length: p.geometry.wing_length = x; break;
  }
  return p;
}

void validate_point(const SweepPoint& p) {
  PeriodicStructure{p.geometry, p.d_over_a * p.geometry.end_separation}.validate();
}

}  // namespace

void SweepSpec::validate() const {
  range.validate();
  quadrature.validate();
  if (observable == Observable::abs_total_force && count.is_asymptotic()) {
    throw ValidationError("abs_total_force is unbounded for n = inf; use effectiveness");
  }
  // Every field is monotone in the swept variable, so the endpoints cover the range.
  validate_point(point_at(*this, range.min));
  validate_point(point_at(*this, range.max));
}

std::size_t SweepTable::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.ok() ? 0 : 1;
  return n;
}

SweepTable run_sweep(const SweepSpec& spec, const PhysicalConstants& constants) {
  spec.validate();
  constants.validate();
  SweepTable table;
  table.rows.resize(spec.range.steps);
  detail::parallel_for(spec.range.steps, spec.threads, [&](std::size_t i) {
    SweepRow& row = table.rows[i];
    row.variable = spec.range.at(i);
    const SweepPoint p = point_at(spec, row.variable);
    const PeriodicStructure structure{p.geometry, p.d_over_a * p.geometry.end_separation,
                                      spec.count};
    try {
      if (spec.count.is_asymptotic()) {
        row.value = asymptotic_effectiveness(structure, constants, spec.quadrature);
      } else {
        const StructureResult r = total_force(structure, constants, spec.quadrature);
        row.value = spec.observable == Observable::abs_total_force ? std::abs(r.total_force)
                                                                   : r.effectiveness;
      }
    } catch (const Error& e) {
      row.value = kNaN;
      row.error = e.what();
    }
  });
  return table;
}

void SearchBox::validate() const {
  if (!(std::isfinite(phi_min) && std::isfinite(phi_max) && phi_min < phi_max)) {
    throw ValidationError("search box requires phi_min < phi_max");
  }
  if (phi_min < 0.0 || phi_max >= kMaxHalfAngle) {
    throw ValidationError("search box phi range must lie in [0, 45) deg");
  }
  if (!(std::isfinite(d_over_a_min) && std::isfinite(d_over_a_max) &&
        d_over_a_min < d_over_a_max)) {
    throw ValidationError("search box requires d_over_a_min < d_over_a_max");
  }
  if (!(d_over_a_min > 0.0)) {
    throw ValidationError("search box requires d_over_a_min > 0");
  }
}

bool SearchBox::contains(double phi, double d_over_a) const noexcept {
  return phi >= phi_min && phi <= phi_max && d_over_a >= d_over_a_min &&
         d_over_a <= d_over_a_max;
}

void SearchProblem::validate() const {
  box.validate();
  if (!std::isfinite(r_over_a) || !(r_over_a > 0.0)) {
    throw ValidationError("R/a > 0 required (got " + format_double(r_over_a) + ")");
  }
  geometry_at(box.phi_min).validate();
}

CavityGeometry SearchProblem::geometry_at(double phi) const noexcept {
  return {a, r_over_a * a, width, phi};
}

double effectiveness_from_forces(const SearchProblem& problem, double phi, double d_over_a,
                                 double per_cavity_force, double gap_force) {
  const CavityGeometry geom = problem.geometry_at(phi);
  const double gap = d_over_a * problem.a;
  if (problem.count.is_asymptotic()) {
    return compose_asymptotic_effectiveness(geom, gap, per_cavity_force, gap_force);
  }
  return compose_effectiveness(geom, gap, problem.count.value(), per_cavity_force, gap_force);
}

std::pair<std::size_t, std::size_t> QSurface::argmax() const {
  const std::size_t nd = d_over_a_axis.size();
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (std::isnan(values[k])) continue;
    if (!best || values[k] > values[*best]) best = k;
  }
  if (!best) throw NumericalError("q surface has no finite cells");
  return {*best / nd, *best % nd};
}

QSurface q_surface(const SearchProblem& problem, GridResolution resolution,
                   const PhysicalConstants& constants, const QuadratureSettings& settings,
                   unsigned threads) {
  problem.validate();
  constants.validate();
  settings.validate();
  if (resolution.phi < 8 || resolution.d_over_a < 8) {
    throw ValidationError("surface resolution must be at least 8 x 8 (got " +
                          std::to_string(resolution.phi) + " x " +
                          std::to_string(resolution.d_over_a) + ")");
  }

  QSurface out;
  out.phi_axis = linspace(problem.box.phi_min, problem.box.phi_max, resolution.phi);
  out.d_over_a_axis =
      linspace(problem.box.d_over_a_min, problem.box.d_over_a_max, resolution.d_over_a);
  const std::size_t np = out.phi_axis.size();
  const std::size_t nd = out.d_over_a_axis.size();

  // F_x(a) depends only on phi: one integration per grid row.
  std::vector<double> row_force(np, kNaN);
  std::vector<std::string> row_error(np);
  detail::parallel_for(np, threads, [&](std::size_t i) {
    try {
      row_force[i] = wing_force(problem.geometry_at(out.phi_axis[i]), constants, settings).force;
    } catch (const Error& e) {
      row_error[i] = e.what();
    }
  });

  out.values.assign(np * nd, kNaN);
  std::vector<std::string> cell_error(np * nd);
  detail::parallel_for(np * nd, threads, [&](std::size_t k) {
    const std::size_t i = k / nd;
    const std::size_t j = k % nd;
    if (!row_error[i].empty()) {
      cell_error[k] = row_error[i];
      return;
    }
    try {
      const double phi = out.phi_axis[i];
      const double doa = out.d_over_a_axis[j];
      const double fd = wing_force_at_separation(problem.geometry_at(phi), doa * problem.a,
                                                 constants, settings)
                            .force;
      out.values[k] = effectiveness_from_forces(problem, phi, doa, row_force[i], fd);
    } catch (const Error& e) {
      cell_error[k] = e.what();
    }
  });

  for (std::size_t k = 0; k < cell_error.size(); ++k) {
    if (!cell_error[k].empty()) out.failures.push_back({k / nd, k % nd, cell_error[k]});
  }
  return out;
}

}  // namespace casimir
