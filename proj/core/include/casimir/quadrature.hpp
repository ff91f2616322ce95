#pragma once

#include <cstddef>
#include <exception>
#include <memory>
#include <type_traits>

#include "casimir/error.hpp"

namespace casimir {

struct QuadratureSettings {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  std::size_t max_subdivisions = 2000;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  std::size_t subdivisions = 0;
  bool converged = false;
  bool roundoff_limited = false;  // stopped at the round-off floor, counts as converged
};

namespace detail {

struct Integrand {
  double (*call)(double, void*) = nullptr;
  void* context = nullptr;
  std::exception_ptr failure;  // first exception thrown by the callee
  std::size_t evaluations = 0;
};

QuadratureResult integrate_gk15(Integrand& f, double lo, double hi,
                                const QuadratureSettings& settings);

}  // namespace detail

/// Globally adaptive 15-point Gauss-Kronrod integration of f over [lo, hi]
/// (GSL qag). The subinterval with the largest error is bisected until the
/// error estimate is at most max(abs_tol, rel_tol |I|) or `max_subdivisions`
/// bisections have been spent. rel_tol below 50 eps is raised to 50 eps, the
/// floor GSL accepts. An estimate stuck at the round-off level counts as
/// converged and sets `roundoff_limited`. Deterministic. Returns the best estimate with
/// `converged` false when the budget runs out; exceptions thrown by f are
/// rethrown.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi,
                                    const QuadratureSettings& settings) {
  using Fn = std::remove_reference_t<F>;
  detail::Integrand integrand;
  integrand.context = const_cast<void*>(static_cast<const void*>(std::addressof(f)));
  integrand.call = [](double x, void* ctx) -> double { return (*static_cast<Fn*>(ctx))(x); };
  return detail::integrate_gk15(integrand, lo, hi, settings);
}

}  // namespace casimir
