#include "specasym/fk/log_volume.hpp"

#include <cmath>
#include <vector>

#include "specasym/core/errors.hpp"
#include "specasym/core/quadrature.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/fk/bridges.hpp"
#include "specasym/fk/philox.hpp"

namespace specasym {
namespace {

QuadratureOptions tight() {
  QuadratureOptions q;
  q.abs_tol = 1e-15;
  q.rel_tol = 1e-11;
  return q;
}

// int_{[a, inf)^k} f(scale * prod x) dx by nested quadrature.
double nested(const RealFunction& f, double a, int k, double scale, double& error) {
  if (k == 0) return f(scale);
  auto inner = [&](double x) {
    double e = 0.0;
    const double v = nested(f, a, k - 1, scale * x, e);
    return v;
  };
  const auto r = integrate_to_infinity(inner, a, tight());
  if (!r.converged) throw ConvergenceError("log-volume quadrature did not converge");
  error += r.error;
  return r.value;
}

}  // namespace

double log_volume_rhs(const RealFunction& f, double a, int n) {
  require(a > 0.0, "log-volume: a must be positive");
  require(n >= 1, "log-volume: n must be at least 1");
  const double an = std::pow(a, n);
  const double norm = std::pow(2.0, n) / special::factorial(static_cast<unsigned>(n - 1));
  auto g = [&](double p) {
    const double v = f(p);
    return v == 0.0 ? 0.0 : v * std::pow(std::log(p / an), n - 1);
  };
  return norm * integrate_to_infinity_or_throw(g, an, tight());
}

LogVolumeValue log_volume_lhs(const RealFunction& f, double a, int n, LogVolumeMethod method,
                              std::size_t samples, std::uint64_t seed) {
  require(a > 0.0, "log-volume: a must be positive");
  require(n >= 1, "log-volume: n must be at least 1");
  const double orthants = std::pow(2.0, n);
  LogVolumeValue out;
  if (method == LogVolumeMethod::Quadrature) {
    require(n <= 3, "log-volume: quadrature supports n <= 3");
    double error = 0.0;
    out.value = orthants * nested(f, a, n, 1.0, error);
    out.error = orthants * error;
    return out;
  }
  require(samples >= 2, "log-volume: at least two samples are needed");
  // |x_i| = a / u is Pareto with density a / x^2 on [a, inf).
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    PhiloxStream rng(seed, static_cast<std::uint32_t>(StreamId::LogVolume), s);
    double p = 1.0, inv_density = 1.0;
    for (int i = 0; i < n; ++i) {
      const double x = a / rng.uniform();
      p *= x;
      inv_density *= x * x / a;
    }
    const double w = orthants * f(p) * inv_density;
    sum += w;
    sum_sq += w * w;
  }
  const double mean = sum / samples;
  const double var = std::max(sum_sq / samples - mean * mean, 0.0) * samples / (samples - 1);
  out.value = mean;
  out.error = std::sqrt(var / samples);
  return out;
}

}  // namespace specasym
