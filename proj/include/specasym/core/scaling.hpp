#pragma once

#include "specasym/core/spectrum.hpp"

namespace specasym {

// sigma(-Delta + c V) = c^{2/(p+2)} sigma(-Delta + V) for V homogeneous of
// degree p.
double potential_scaling_factor(double c, double p);
// sigma(-c Delta + V) = c^{p/(p+2)} sigma(-Delta + V).
double laplacian_scaling_factor(double c, double p);

Spectrum scale_potential_spectrum(const Spectrum& spectrum, double c, double p);
Spectrum scale_laplacian_spectrum(const Spectrum& spectrum, double c, double p);

}  // namespace specasym
