#pragma once

#include <cstdint>
#include <functional>

namespace specasym {

using RealFunction = std::function<double(double)>;

// 2^n / (n-1)! int_{a^n}^inf f(p) ln(p / a^n)^{n-1} dp.
double log_volume_rhs(const RealFunction& f, double a, int n);

enum class LogVolumeMethod { Quadrature, MonteCarlo };

struct LogVolumeValue {
  double value = 0.0;
  double error = 0.0;  // quadrature estimate or Monte Carlo stderr
};

// int over {every |x_i| >= a} of f(prod_i |x_i|) dx, by nested quadrature
// (n <= 3) or by Monte Carlo with Pareto-distributed |x_i|.
LogVolumeValue log_volume_lhs(const RealFunction& f, double a, int n, LogVolumeMethod method,
                              std::size_t samples = 1000000, std::uint64_t seed = 0x5eed);

}  // namespace specasym
