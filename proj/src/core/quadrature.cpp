#include "specasym/core/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "specasym/core/errors.hpp"

namespace specasym {
namespace {

// Kronrod nodes on [0, 1] (positive half) and weights for K15 and G7.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes at odd positions 1, 3, 5 and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod(const Integrand& f, double a, double b, int& evaluations) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod_sum = kKronrodWeights[7] * fc;
  double gauss_sum = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double fsum = f(centre - dx) + f(centre + dx);
    kronrod_sum += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) gauss_sum += kGaussWeights[i / 2] * fsum;
  }
  evaluations += 15;
  const double value = kronrod_sum * half;
  double error = std::abs((kronrod_sum - gauss_sum) * half);
  if (!std::isfinite(value)) error = std::numeric_limits<double>::infinity();
  return {a, b, value, error};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options) {
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  require(std::isfinite(a) && std::isfinite(b), "integrate: finite limits required");
  const double sign = b > a ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);

  std::priority_queue<Segment> heap;
  Segment first = kronrod(f, a, b, result.evaluations);
  double total = first.value;
  double total_error = first.error;
  heap.push(first);
  int subdivisions = 0;
  while (total_error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
    if (subdivisions >= options.max_subdivisions) break;
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap.push(worst);
      break;
    }
    Segment left = kronrod(f, worst.a, mid, result.evaluations);
    Segment right = kronrod(f, mid, worst.b, result.evaluations);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }
  // Re-sum to remove drift from the incremental updates.
  total = 0.0;
  total_error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_error += heap.top().error;
    heap.pop();
  }
  result.value = sign * total;
  result.error = total_error;
  result.converged = std::isfinite(total) &&
                     total_error <= std::max(options.abs_tol, options.rel_tol * std::abs(total));
  return result;
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const QuadratureOptions& options) {
  auto mapped = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double one_minus = 1.0 - u;
    const double x = a + u / one_minus;
    const double value = f(x) / (one_minus * one_minus);
    return std::isfinite(value) ? value : 0.0;
  };
  return integrate(mapped, 0.0, 1.0, options);
}

double integrate_or_throw(const Integrand& f, double a, double b,
                          const QuadratureOptions& options) {
  const auto r = integrate(f, a, b, options);
  if (!r.converged) {
    throw ConvergenceError("quadrature did not converge (estimated error " +
                           std::to_string(r.error) + ")");
  }
  return r.value;
}

double integrate_to_infinity_or_throw(const Integrand& f, double a,
                                      const QuadratureOptions& options) {
  const auto r = integrate_to_infinity(f, a, options);
  if (!r.converged) {
    throw ConvergenceError("quadrature on [a, inf) did not converge (estimated error " +
                           std::to_string(r.error) + ")");
  }
  return r.value;
}

}  // namespace specasym
