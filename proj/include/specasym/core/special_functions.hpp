#pragma once

namespace specasym::special {

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Gamma function via the Lanczos approximation (g = 7, 9 terms) with the
// reflection formula below 1/2. Relative accuracy ~1e-15 on (0, 50).
double gamma(double x);
double log_gamma(double x);

// Riemann zeta for s > 1 by Euler-Maclaurin summation.
double riemann_zeta(double s);
// Hurwitz zeta sum_{k>=0} (k + a)^{-s} for s > 1, a > 0.
double hurwitz_zeta(double s, double a);

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P.
double gamma_p(double a, double x);
double gamma_q(double a, double x);
// Unregularized upper incomplete gamma Gamma(a, x) = Q(a, x) Gamma(a).
double upper_gamma(double a, double x);

double factorial(unsigned n);

}  // namespace specasym::special
