#include "specasym/core/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "specasym/core/errors.hpp"

namespace specasym {

Spectrum make_spectrum(std::vector<double> eigenvalues, std::string label) {
  for (double e : eigenvalues) require(std::isfinite(e), "spectrum: non-finite eigenvalue");
  std::sort(eigenvalues.begin(), eigenvalues.end());
  Spectrum s;
  s.convergence.assign(eigenvalues.size(), 0.0);
  s.eigenvalues = std::move(eigenvalues);
  s.label = std::move(label);
  return s;
}

std::size_t counting_function(const Spectrum& spectrum, double energy) {
  if (energy > spectrum.reliability_cutoff) {
    throw UntrustedRangeError("counting function: E = " + std::to_string(energy) +
                              " exceeds reliability cutoff " +
                              std::to_string(spectrum.reliability_cutoff));
  }
  const auto& ev = spectrum.eigenvalues;
  return static_cast<std::size_t>(std::upper_bound(ev.begin(), ev.end(), energy) - ev.begin());
}

}  // namespace specasym
