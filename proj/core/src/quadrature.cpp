#include "casimir/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>

#include "casimir/format.hpp"

namespace casimir {

void QuadratureSettings::validate() const {
  if (!std::isfinite(rel_tol) || !(rel_tol > 0.0)) {
    throw ValidationError("rel_tol > 0 required (got " + format_double(rel_tol) + ")");
  }
  if (!std::isfinite(abs_tol) || abs_tol < 0.0) {
    throw ValidationError("abs_tol >= 0 required (got " + format_double(abs_tol) + ")");
  }
  if (max_subdivisions < 1) {
    throw ValidationError("max_subdivisions >= 1 required");
  }
}

namespace detail {
namespace {

// Exceptions must not unwind through GSL's C frames. The first one is parked
// and every later evaluation returns NaN until qag gives up.
double trampoline(double x, void* params) {
  auto& f = *static_cast<Integrand*>(params);
  if (f.failure) return std::numeric_limits<double>::quiet_NaN();
  ++f.evaluations;
  try {
    return f.call(x, f.context);
  } catch (...) {
    f.failure = std::current_exception();
    return std::numeric_limits<double>::quiet_NaN();
  }
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const noexcept {
    gsl_integration_workspace_free(w);
  }
};

}  // namespace

QuadratureResult integrate_gk15(Integrand& f, double lo, double hi,
                                const QuadratureSettings& settings) {
  // GSL's default handler aborts; status codes are inspected instead.
  static std::once_flag handler_off;
  std::call_once(handler_off, [] { gsl_set_error_handler_off(); });

  constexpr double kMinRelTol = 50.0 * std::numeric_limits<double>::epsilon();
  const std::size_t limit = settings.max_subdivisions + 1;
  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> workspace(
      gsl_integration_workspace_alloc(limit));
  if (!workspace) throw std::bad_alloc();

  gsl_function fn{&trampoline, &f};
  QuadratureResult out;
  const int status = gsl_integration_qag(
      &fn, lo, hi, settings.abs_tol, std::max(settings.rel_tol, kMinRelTol), limit,
      GSL_INTEG_GAUSS15, workspace.get(), &out.value, &out.abs_error);
  if (f.failure) std::rethrow_exception(f.failure);

  out.evaluations = f.evaluations;
  out.subdivisions = workspace->size > 0 ? workspace->size - 1 : 0;
  // EROUND: bisection stopped paying off because the estimate sits at the
  // round-off level. That is the best double precision allows.
  out.roundoff_limited = status == GSL_EROUND;
  out.converged = (status == GSL_SUCCESS || out.roundoff_limited) && std::isfinite(out.value) &&
                  std::isfinite(out.abs_error);
  return out;
}

}  // namespace detail
}  // namespace casimir
