#pragma once

#include <cstddef>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/sweep.hpp"

namespace casimir {

struct OptimizerSettings {
  GridResolution grid;
  // Used for grid and refinement alike so that the refined optimum can only
  // improve on the best grid sample.
  QuadratureSettings quadrature{1e-10, 0.0, 2000};
  double phi_step_tol = degrees_to_radians(1e-3);
  double d_over_a_step_tol = 1e-4;
  std::size_t max_iterations = 10000;
  unsigned threads = 0;

  void validate() const;
};

enum class SampleStage { grid, refinement };

struct TraceSample {
  double phi = 0.0;
  double d_over_a = 0.0;
  double q = 0.0;
  SampleStage stage = SampleStage::grid;
};

struct OptimizationResult {
  double phi_star = 0.0;  // rad
  double d_over_a_star = 0.0;
  double q_star = 0.0;  // N/m
  GridResolution grid_resolution;
  std::size_t refinement_iterations = 0;
  std::vector<TraceSample> trace;
  // Set when the maximizer sits within one final step of the box edge.
  bool boundary_maximum = false;
};

/// Raised when a quadrature failure stops the search. Carries every sample
/// evaluated before the failure.
class OptimizationError : public NumericalError {
 public:
  OptimizationError(const std::string& what, std::vector<TraceSample> partial)
      : NumericalError(what), partial_trace_(std::move(partial)) {}

  const std::vector<TraceSample>& partial_trace() const noexcept { return partial_trace_; }

 private:
  std::vector<TraceSample> partial_trace_;
};

/// Maximizes Q over problem.box: a coarse grid scan followed by a compass
/// pattern search from the best cell, halving both steps whenever no
/// neighbour improves, until they fall below the step tolerances.
OptimizationResult maximize_q(const SearchProblem& problem, const PhysicalConstants& constants,
                              const OptimizerSettings& settings = {});

}  // namespace casimir
