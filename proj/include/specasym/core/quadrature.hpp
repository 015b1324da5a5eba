#pragma once

#include <functional>

namespace specasym {

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b].
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options = {});

// Integral over [a, inf) through the map x = a + u / (1 - u).
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const QuadratureOptions& options = {});

// Same as above but throws ConvergenceError when the tolerance is not met.
double integrate_or_throw(const Integrand& f, double a, double b,
                          const QuadratureOptions& options = {});
double integrate_to_infinity_or_throw(const Integrand& f, double a,
                                      const QuadratureOptions& options = {});

}  // namespace specasym
