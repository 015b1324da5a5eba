#pragma once

#include <string>
#include <vector>

#include "specasym/core/exponent_vector.hpp"
#include "specasym/core/spectrum.hpp"
#include "specasym/heat/heat_trace.hpp"

namespace specasym {

// Spectra and trace tables needed by the sliced bounds for one exponent
// vector: the base operator H_{n-1} (exponents without the smallest one),
// its trace table, and the 1D table F^{(gamma)} with gamma = 1 / d_n.
struct SliceArtifacts {
  ExponentVector alpha;
  double d_n = 0.0;
  double b_n = 0.0;
  Spectrum base;
  TraceTable base_table;
  TraceTable one_d;
};

struct SliceArtifactOptions {
  // Base spectrum reach and spacing (1D base only).
  double base_energy = 500.0;
  double base_spacing = 0.01;
  // Reach and spacing of the F^{(gamma)} spectrum.
  double one_d_energy = 30.0;
  double one_d_spacing = 0.1;
};

// n = 2 only: the base is the 1D operator -d^2/dx^2 + |x|^{alpha_1}.
SliceArtifacts make_slice_artifacts(const ExponentVector& alpha,
                                    const SliceArtifactOptions& options = {});

// F(x_n, t) = Tr e^{-t H_{n-1}(x_n)} = F(1, t |x_n|^{1/d_n}).
TraceValue slice_function(const SliceArtifacts& art, double x_n, double t);

// Z_SB(t) = sum_j F^{(gamma)}(t eps_j^{b_n}) over the base eigenvalues
// eps_j, plus the contribution of base eigenvalues beyond the trusted range
// from a power-law counting model. Throws UntrustedRangeError when that
// contribution exceeds 10% of the sum.
TraceValue z_sliced_bread(const SliceArtifacts& art, double t);

struct SgtResult {
  bool divergent = false;
  TraceValue value;
  std::string certificate;
};

// Z_SGT(t) = (pi t)^{-1/2} int_0^inf F(x, t) dx. Divergent (with a
// certificate) when alpha_n = alpha_{n-1}.
SgtResult z_sliced_gt(const SliceArtifacts& art, double t);
// Divergence test only; certificate empty when finite.
SgtResult sliced_gt_divergence(const ExponentVector& alpha);

// Closed form of the same integral through the Mellin transform:
// (pi t)^{-1/2} t^{-d_n} Gamma(d_n + 1) zeta_{H_{n-1}}(d_n).
double z_sliced_gt_closed_form(double d_n, double zeta_value, double t);

// t^{d_n} int_0^1 F(x, t) dx, which tends to 0 as t -> 0.
TraceValue near_origin_slice_mass(const SliceArtifacts& art, double t);

struct DivergenceCertificate {
  bool divergent = false;
  // Power of |x_j| left after the x_n integration, one per j < n.
  std::vector<double> exponents;
  std::string reason;
};

// Classical phase-space integral of e^{-t(|xi|^2 + V)}: after the x_n
// integration the integrand is t^{-1/alpha_n} prod_{j<n} |x_j|^{-alpha_j /
// alpha_n}, whose integral over (0, inf) diverges for every exponent.
DivergenceCertificate z_classical_product_divergence(const ExponentVector& alpha);

// Upper bound Tr e^{-tH} <= prod_j Tr e^{-t T_j} from
// H >= sum_j T_j, T_j = (1/n)(-d^2/dx_j^2 + c_j |x_j|^{eta_j}),
// eta_j = 2 alpha_j / (p_j + 2), c_j the transverse ground energy.
class SeparableBound {
 public:
  struct Factor {
    double eta = 0.0;
    double coupling = 0.0;
  };

  SeparableBound(const ExponentVector& alpha, double energy = 30.0, double spacing = 0.05);
  TraceValue operator()(double t) const;
  const std::vector<Factor>& factors() const { return factors_; }

 private:
  std::size_t n_ = 0;
  std::vector<Factor> factors_;
  std::vector<TraceTable> tables_;
};

// The reduction exponents and couplings without building trace tables.
std::vector<SeparableBound::Factor> separable_factors(const ExponentVector& alpha);

}  // namespace specasym
