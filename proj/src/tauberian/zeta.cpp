#include <algorithm>
#include <cmath>
#include <sstream>

#include "specasym/core/errors.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/tauberian/tauberian.hpp"

namespace specasym {
namespace {

// Fit of log(i + 1/2) = log A + l log lambda_i + d log log lambda_i over the
// trusted indices [from, n).
double growth_power(const Spectrum& s, std::size_t from, std::size_t n, int d) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  for (std::size_t i = from; i < n; ++i) {
    const double lambda = s.eigenvalues[i];
    const double x = std::log(lambda);
    const double y = std::log(static_cast<double>(i) + 0.5) - (d ? d * std::log(x) : 0.0);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const double denom = m * sxx - sx * sx;
  require(m >= 4 && denom > 0.0, "spectral zeta: too few eigenvalues for a tail fit");
  return (m * sxy - sx * sy) / denom;
}

// int_{E_c}^inf E^{-s} dN for N = A E^l (ln E)^d anchored at N(E_c) = count.
double tail_integral(double s, double l, int d, double count, double edge) {
  const double sigma = s - l;
  if (sigma <= 0.0) {
    std::ostringstream msg;
    msg << "spectral zeta: divergent tail, s = " << s << " <= fitted growth power " << l;
    throw ValidationError(msg.str());
  }
  if (d == 0) return count * l * std::pow(edge, -s) / sigma;
  require(edge > 1.0, "spectral zeta: log tail needs a cutoff above 1");
  const double u = std::log(edge);
  const double a = count / (std::pow(edge, l) * std::pow(u, d));
  // With E = e^u: A int_{u_c}^inf e^{-sigma u} (l u^d + d u^{d-1}) du.
  const double x = sigma * u;
  return a * (l * special::upper_gamma(d + 1.0, x) / std::pow(sigma, d + 1.0) +
              d * special::upper_gamma(static_cast<double>(d), x) / std::pow(sigma, d));
}

}  // namespace

ZetaTail parse_zeta_tail(const std::string& text) {
  if (text == "none") return ZetaTail::None;
  if (text == "weyl-power") return ZetaTail::WeylPower;
  if (text == "weyl-power-log") return ZetaTail::WeylPowerLog;
  throw ValidationError("unknown zeta tail '" + text + "' (none, weyl-power, weyl-power-log)");
}

std::string to_string(ZetaTail tail) {
  switch (tail) {
    case ZetaTail::None: return "none";
    case ZetaTail::WeylPower: return "weyl-power";
    case ZetaTail::WeylPowerLog: return "weyl-power-log";
  }
  return "unknown";
}

ZetaValue spectral_zeta(const Spectrum& spectrum, double s, ZetaTail tail) {
  require(std::isfinite(s) && s > 0.0, "spectral zeta: s must be positive");
  require(!spectrum.empty(), "spectral zeta: empty spectrum");
  ZetaValue z;
  z.s = s;
  const std::size_t n = static_cast<std::size_t>(
      std::upper_bound(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                       spectrum.reliability_cutoff) -
      spectrum.eigenvalues.begin());
  require(n > 0, "spectral zeta: no eigenvalue below the reliability cutoff");
  double discretization = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = spectrum.eigenvalues[i];
    require(lambda > 0.0, "spectral zeta: eigenvalues must be positive");
    const double term = std::pow(lambda, -s);
    z.partial_sum += term;
    const double rel = i < spectrum.convergence.size() ? std::abs(spectrum.convergence[i]) : 0.0;
    discretization += s * rel * term;
  }
  if (tail != ZetaTail::None) {
    require(n >= 16, "spectral zeta: a tail model needs at least 16 trusted eigenvalues");
    const int d = tail == ZetaTail::WeylPowerLog ? 1 : 0;
    const double edge = std::isfinite(spectrum.reliability_cutoff) ? spectrum.reliability_cutoff
                                                                   : spectrum.eigenvalues[n - 1];
    const double count = static_cast<double>(n);
    const double l_half = growth_power(spectrum, n / 2, n, d);
    const double l_quarter = growth_power(spectrum, (3 * n) / 4, n, d);
    z.growth_power = l_half;
    z.tail_estimate = tail_integral(s, l_half, d, count, edge);
    double alternative = z.tail_estimate;
    if (s > l_quarter) alternative = tail_integral(s, l_quarter, d, count, edge);
    z.error = std::abs(z.tail_estimate - alternative) + 0.1 * z.tail_estimate;
  }
  z.total = z.partial_sum + z.tail_estimate;
  z.error += discretization;
  return z;
}

}  // namespace specasym
