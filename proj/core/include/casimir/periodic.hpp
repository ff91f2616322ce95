#pragma once

#include <cstdint>

#include "casimir/constants.hpp"
#include "casimir/geometry.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/wing_force.hpp"

namespace casimir {

/// Number of cavities in a periodic structure: a positive count or the
/// n -> infinity limit.
class CavityCount {
 public:
  static constexpr CavityCount finite(std::uint64_t n) noexcept { return CavityCount(n); }
  static constexpr CavityCount asymptotic() noexcept { return CavityCount(0); }

  constexpr bool is_asymptotic() const noexcept { return n_ == 0; }
  /// Only meaningful when !is_asymptotic().
  constexpr std::uint64_t value() const noexcept { return n_; }

  friend constexpr bool operator==(CavityCount, CavityCount) = default;

 private:
  constexpr explicit CavityCount(std::uint64_t n) noexcept : n_(n) {}
  std::uint64_t n_;
};

/// n identical cavities in a row with gap `gap` (d) between successive periods.
struct PeriodicStructure {
  CavityGeometry geometry;
  double gap = 0.0;  // d, m
  CavityCount count = CavityCount::finite(1);

  void validate() const;
};

struct StructureResult {
  double total_force = 0.0;    // F_sum, N
  double effectiveness = 0.0;  // Q, N/m
  ForceResult per_cavity;      // F_x(a)
  ForceResult gap;             // F_x(d)

  double per_cavity_force() const noexcept { return per_cavity.force; }
  double gap_force() const noexcept { return gap.force; }

  friend bool operator==(const StructureResult&, const StructureResult&) = default;
};

/// n F_x(a) - (n-1) F_x(d), evaluated as F_x(a) + (n-1)(F_x(a) - F_x(d)) so
/// that d = a cancels exactly for any n.
double compose_total_force(std::uint64_t n, double per_cavity_force, double gap_force) noexcept;

/// Transverse length n(a + 2R tan phi) + (n-1) d of an n-cavity structure.
double structure_length(const CavityGeometry& geom, double gap, std::uint64_t n) noexcept;

/// Per-period length a + 2R tan phi + d, the n -> infinity denominator.
double period_length(const CavityGeometry& geom, double gap) noexcept;

/// F_sum / structure_length. Throws DegenerateDenominatorError if the length is not positive.
double compose_effectiveness(const CavityGeometry& geom, double gap, std::uint64_t n,
                             double per_cavity_force, double gap_force);

/// (F_x(a) - F_x(d)) / period_length.
double compose_asymptotic_effectiveness(const CavityGeometry& geom, double gap,
                                        double per_cavity_force, double gap_force);

/// Total force and effectiveness of a finite structure. Each wing force is
/// integrated exactly once.
StructureResult total_force(const PeriodicStructure& structure,
                            const PhysicalConstants& constants,
                            const QuadratureSettings& settings = {});

double effectiveness(const PeriodicStructure& structure, const PhysicalConstants& constants,
                     const QuadratureSettings& settings = {});

/// lim n->inf Q. The structure's count is ignored.
double asymptotic_effectiveness(const PeriodicStructure& structure,
                                const PhysicalConstants& constants,
                                const QuadratureSettings& settings = {});

}  // namespace casimir
