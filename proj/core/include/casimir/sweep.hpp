#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/geometry.hpp"
#include "casimir/periodic.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

enum class SweepVariable { d_over_a, phi, wing_length };
enum class Observable { abs_total_force, effectiveness };

std::string_view to_string(SweepVariable v) noexcept;
std::string_view to_string(Observable o) noexcept;

/// Uniformly spaced closed interval; the last value is exactly `max`.
struct SweepRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 2;

  void validate() const;
  double at(std::size_t i) const noexcept;
  std::vector<double> values() const;
};

/// A one-dimensional sweep. `geometry`, `d_over_a` and `count` fix every
/// parameter; the swept one is overridden per row. Angles are radians and
/// wing lengths meters.
struct SweepSpec {
  SweepVariable variable = SweepVariable::d_over_a;
  SweepRange range;
  CavityGeometry geometry;
  double d_over_a = 1.0;
  CavityCount count = CavityCount::finite(1);
  Observable observable = Observable::abs_total_force;
  QuadratureSettings quadrature;
  unsigned threads = 0;

  void validate() const;
};

struct SweepRow {
  double variable = 0.0;
  double value = 0.0;  // NaN when `error` is set
  std::string error;

  bool ok() const noexcept { return error.empty(); }
};

struct SweepTable {
  std::vector<SweepRow> rows;

  std::size_t failures() const noexcept;
};

/// Evaluates the observable at every range point. Numerical failures become
/// error rows and the sweep continues; rows are in range order.
SweepTable run_sweep(const SweepSpec& spec, const PhysicalConstants& constants);

/// Box over (phi [rad], d/a) searched by q_surface and maximize_q.
struct SearchBox {
  double phi_min = degrees_to_radians(0.01);
  double phi_max = degrees_to_radians(20.0);
  double d_over_a_min = 1.01;
  double d_over_a_max = 3.0;

  void validate() const;
  bool contains(double phi, double d_over_a) const noexcept;
};

struct GridResolution {
  std::size_t phi = 64;
  std::size_t d_over_a = 64;

  friend bool operator==(const GridResolution&, const GridResolution&) = default;
};

/// Cavity family at fixed a and R/a whose effectiveness is studied over (phi, d/a).
struct SearchProblem {
  double a = 4e-9;
  double r_over_a = 2.5;
  double width = 1.0;
  CavityCount count = CavityCount::finite(2);
  SearchBox box;

  void validate() const;
  CavityGeometry geometry_at(double phi) const noexcept;
};

/// Q for the given pre-computed wing forces; finite or asymptotic per `count`.
double effectiveness_from_forces(const SearchProblem& problem, double phi, double d_over_a,
                                 double per_cavity_force, double gap_force);

struct CellFailure {
  std::size_t phi_index = 0;
  std::size_t d_over_a_index = 0;
  std::string message;
};

/// Dense Q grid. values[i * d_over_a_axis.size() + j] belongs to
/// (phi_axis[i], d_over_a_axis[j]). Failed cells hold NaN.
struct QSurface {
  std::vector<double> phi_axis;
  std::vector<double> d_over_a_axis;
  std::vector<double> values;
  std::vector<CellFailure> failures;

  double at(std::size_t i, std::size_t j) const { return values.at(i * d_over_a_axis.size() + j); }
  /// Index of the largest finite value; ties go to the first in row-major order.
  std::pair<std::size_t, std::size_t> argmax() const;
};

/// Throws ValidationError below 8 x 8.
QSurface q_surface(const SearchProblem& problem, GridResolution resolution,
                   const PhysicalConstants& constants,
                   const QuadratureSettings& settings = {}, unsigned threads = 0);

}  // namespace casimir
