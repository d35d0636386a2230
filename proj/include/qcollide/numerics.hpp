#pragma once

// Small numeric helpers used by the sweep machinery and the self checks.

#include <functional>
#include <span>
#include <vector>

namespace qcollide {

// Least-squares slope of log(y) against log(x). Used for order fits; callers
// pass amplitude-scale errors so the slope matches the scheme order.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

// Romberg integration to a relative/absolute tolerance; used as an
// independent quadrature oracle for phase integrals.
double romberg(const std::function<double(double)>& f, double a, double b,
               double tol = 1e-12, int max_level = 22);

}  // namespace qcollide
