#include <algorithm>
#include <cmath>
#include <sstream>

#include "specasym/core/errors.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/heat/heat_trace.hpp"
#include "specasym/tauberian/tauberian.hpp"

namespace specasym {

AsymptoticLaw karamata_convert(const AsymptoticLaw& law) {
  require(law.power > 0.0, "karamata_convert: power must be positive");
  AsymptoticLaw out = law;
  const double g = special::gamma(law.power + 1.0);
  if (law.regime == Regime::HeatTrace) {
    out.regime = Regime::Counting;
    out.constant = law.constant / g;
  } else {
    out.regime = Regime::HeatTrace;
    out.constant = law.constant * g;
  }
  return out;
}

CountingSamples CountingSamples::from_spectrum(const Spectrum& spectrum) {
  CountingSamples s;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (spectrum.eigenvalues[i] > spectrum.reliability_cutoff) break;
    s.energy.push_back(spectrum.eigenvalues[i]);
    s.count.push_back(static_cast<double>(i + 1));
  }
  return s;
}

LaplaceValue laplace_stieltjes(const CountingSamples& samples, double t, StieltjesRule rule) {
  require(t > 0.0, "laplace_stieltjes: t must be positive");
  require(samples.energy.size() == samples.count.size(),
          "laplace_stieltjes: energy and count lengths differ");
  LaplaceValue out;
  const std::size_t m = samples.energy.size();
  if (m == 0) return out;
  double previous_e = 0.0, previous_n = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double e = samples.energy[i];
    const double n = samples.count[i];
    require(e >= previous_e && n >= previous_n,
            "laplace_stieltjes: samples must be nondecreasing in E and N");
    const double at = rule == StieltjesRule::Jump ? e : 0.5 * (e + previous_e);
    out.value += std::exp(-t * at) * (n - previous_n);
    previous_e = e;
    previous_n = n;
  }
  // Remainder from a power law fitted on the upper half of the samples.
  if (m >= 8) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t k = 0;
    for (std::size_t i = m / 2; i < m; ++i) {
      if (samples.energy[i] <= 0.0 || samples.count[i] <= 0.0) continue;
      const double x = std::log(samples.energy[i]);
      const double y = std::log(samples.count[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++k;
    }
    const double denom = k * sxx - sx * sx;
    if (k >= 4 && denom > 0.0) {
      const double l = (k * sxy - sx * sy) / denom;
      if (l > 0.0) {
        out.remainder = power_law_laplace_tail(samples.count.back(), samples.energy.back(), l, t);
      }
    }
  }
  if (out.remainder > 0.05 * out.value) {
    std::ostringstream msg;
    msg << "laplace_stieltjes at t=" << t << ": cutoff remainder " << out.remainder
        << " exceeds 5% of the sum " << out.value;
    throw UntrustedRangeError(msg.str());
  }
  return out;
}

}  // namespace specasym
