#include "specasym/core/scaling.hpp"

#include <cmath>

#include "specasym/core/errors.hpp"

namespace specasym {
namespace {

void check(double c, double p) {
  require(std::isfinite(c) && c > 0.0, "scaling: coupling c must be positive");
  require(std::isfinite(p) && p != -2.0, "scaling: degree p = -2 is excluded");
}

Spectrum scaled(const Spectrum& spectrum, double factor) {
  Spectrum out = spectrum;
  for (double& e : out.eigenvalues) e *= factor;
  out.reliability_cutoff *= factor;
  return out;
}

}  // namespace

double potential_scaling_factor(double c, double p) {
  check(c, p);
  return std::pow(c, 2.0 / (p + 2.0));
}

double laplacian_scaling_factor(double c, double p) {
  check(c, p);
  return std::pow(c, p / (p + 2.0));
}

Spectrum scale_potential_spectrum(const Spectrum& spectrum, double c, double p) {
  return scaled(spectrum, potential_scaling_factor(c, p));
}

Spectrum scale_laplacian_spectrum(const Spectrum& spectrum, double c, double p) {
  return scaled(spectrum, laplacian_scaling_factor(c, p));
}

}  // namespace specasym
