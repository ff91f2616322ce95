#include "casimir/optimize.hpp"

#include <array>
#include <cmath>
#include <map>
#include <string>

#include "casimir/format.hpp"
#include "casimir/wing_force.hpp"

namespace casimir {

void OptimizerSettings::validate() const {
  quadrature.validate();
  if (grid.phi < 8 || grid.d_over_a < 8) {
    throw ValidationError("optimizer grid must be at least 8 x 8");
  }
  if (!(phi_step_tol > 0.0) || !(d_over_a_step_tol > 0.0)) {
    throw ValidationError("optimizer step tolerances must be positive");
  }
}

namespace {

// Memoizes F_x(a) per phi; the pattern search revisits the same angles often.
class QEvaluator {
 public:
  QEvaluator(const SearchProblem& problem, const PhysicalConstants& constants,
             const QuadratureSettings& settings)
      : problem_(problem), constants_(constants), settings_(settings) {}

  double operator()(double phi, double d_over_a) {
    auto it = per_cavity_.find(phi);
    if (it == per_cavity_.end()) {
      it = per_cavity_
               .emplace(phi, wing_force(problem_.geometry_at(phi), constants_, settings_).force)
               .first;
    }
    const double fd = wing_force_at_separation(problem_.geometry_at(phi),
                                               d_over_a * problem_.a, constants_, settings_)
                          .force;
    return effectiveness_from_forces(problem_, phi, d_over_a, it->second, fd);
  }

 private:
  const SearchProblem& problem_;
  const PhysicalConstants& constants_;
  const QuadratureSettings& settings_;
  std::map<double, double> per_cavity_;
};

}  // namespace

OptimizationResult maximize_q(const SearchProblem& problem, const PhysicalConstants& constants,
                              const OptimizerSettings& settings) {
  problem.validate();
  settings.validate();

  OptimizationResult out;
  out.grid_resolution = settings.grid;

  const QSurface grid =
      q_surface(problem, settings.grid, constants, settings.quadrature, settings.threads);

  const std::size_t nd = grid.d_over_a_axis.size();
  for (std::size_t i = 0; i < grid.phi_axis.size(); ++i) {
    for (std::size_t j = 0; j < nd; ++j) {
      const double q = grid.at(i, j);
      if (!std::isnan(q)) {
        out.trace.push_back({grid.phi_axis[i], grid.d_over_a_axis[j], q, SampleStage::grid});
      }
    }
  }
  if (!grid.failures.empty()) {
    const CellFailure& f = grid.failures.front();
    throw OptimizationError("grid scan failed at phi = " +
                                format_double(radians_to_degrees(grid.phi_axis[f.phi_index])) +
                                " deg, d/a = " +
                                format_double(grid.d_over_a_axis[f.d_over_a_index]) + ": " +
                                f.message,
                            std::move(out.trace));
  }

  const auto [bi, bj] = grid.argmax();
  double phi = grid.phi_axis[bi];
  double doa = grid.d_over_a_axis[bj];
  double q = grid.at(bi, bj);
  double phi_step = (problem.box.phi_max - problem.box.phi_min) /
                    static_cast<double>(grid.phi_axis.size() - 1);
  double doa_step = (problem.box.d_over_a_max - problem.box.d_over_a_min) /
                    static_cast<double>(nd - 1);

  QEvaluator eval(problem, constants, settings.quadrature);
  while ((phi_step >= settings.phi_step_tol || doa_step >= settings.d_over_a_step_tol) &&
         out.refinement_iterations < settings.max_iterations) {
    ++out.refinement_iterations;
    const std::array<std::array<double, 2>, 4> candidates = {{{phi + phi_step, doa},
                                                              {phi - phi_step, doa},
                                                              {phi, doa + doa_step},
                                                              {phi, doa - doa_step}}};
    bool moved = false;
    double next_phi = phi;
    double next_doa = doa;
    for (const auto& [cp, cd] : candidates) {
      if (!problem.box.contains(cp, cd)) continue;
      double cq = 0.0;
      try {
        cq = eval(cp, cd);
      } catch (const Error& e) {
        throw OptimizationError(std::string("refinement failed: ") + e.what(),
                                std::move(out.trace));
      }
      out.trace.push_back({cp, cd, cq, SampleStage::refinement});
      if (cq > q) {
        q = cq;
        next_phi = cp;
        next_doa = cd;
        moved = true;
      }
    }
    if (moved) {
      phi = next_phi;
      doa = next_doa;
    } else {
      phi_step *= 0.5;
      doa_step *= 0.5;
    }
  }

  out.phi_star = phi;
  out.d_over_a_star = doa;
  out.q_star = q;
  const double phi_margin = std::max(phi_step, settings.phi_step_tol);
  const double doa_margin = std::max(doa_step, settings.d_over_a_step_tol);
  out.boundary_maximum = phi - problem.box.phi_min <= phi_margin ||
                         problem.box.phi_max - phi <= phi_margin ||
                         doa - problem.box.d_over_a_min <= doa_margin ||
                         problem.box.d_over_a_max - doa <= doa_margin;
  return out;
}

}  // namespace casimir
