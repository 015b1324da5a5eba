#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specasym/core/spectrum.hpp"
#include "specasym/core/theorems.hpp"

namespace specasym {

// Heat-trace law (l, d, c) <-> counting law (l, d, c / Gamma(l + 1)).
AsymptoticLaw karamata_convert(const AsymptoticLaw& law);

// Samples of a nondecreasing counting function N at increasing energies.
struct CountingSamples {
  std::vector<double> energy;
  std::vector<double> count;

  static CountingSamples from_spectrum(const Spectrum& spectrum);
};

enum class StieltjesRule {
  Jump,      // jumps sit at the sample energies (eigenvalue lists)
  Midpoint,  // N sampled from a continuous function; increments at midpoints
};

struct LaplaceValue {
  double value = 0.0;      // Stieltjes sum over the samples
  double remainder = 0.0;  // power-law estimate of the part beyond the last sample
};

// int e^{-tE} dN(E) from the samples (N(0-) = 0). Throws
// UntrustedRangeError when the remainder exceeds 5% of the sum.
LaplaceValue laplace_stieltjes(const CountingSamples& samples, double t,
                               StieltjesRule rule = StieltjesRule::Jump);

// Data for a fit: x = E (counting) or t (heat trace), y = N or Z.
struct FitData {
  Regime regime = Regime::Counting;
  std::vector<double> x;
  std::vector<double> y;
  // Reliability limit on E (counting) or lower limit on t (heat trace).
  double reliable_limit = 0.0;

  static FitData counting(const Spectrum& spectrum);
};

struct FitWindow {
  double lo = 0.0;
  double hi = 0.0;
};

struct ModelFit {
  int log_power = 0;
  double power = 0.0;
  double constant = 0.0;
  double residual = 0.0;  // rms on the log scale
};

struct FitResult {
  AsymptoticLaw law;  // lowest-residual model
  double residual = 0.0;
  FitWindow window;
  std::size_t samples = 0;
  std::vector<ModelFit> models;  // one per candidate d

  const ModelFit& model(int d) const;
};

// Default window: E from ten times the smallest sample up to the reliable
// limit (the lowest decade is preasymptotic); for heat traces t from the
// reliable limit to a tenth of the largest sample.
FitWindow default_window(const FitData& data);

// Least squares of log y = log c + l log X + d log log X for each candidate
// d, with X = E or 1/t. Throws ValidationError on fewer than 10 samples in
// the window or, when some d != 0 is a candidate, a log log X range below
// 0.05.
FitResult fit_asymptotic(const FitData& data, const std::vector<int>& d_candidates,
                         std::optional<FitWindow> window = std::nullopt);

// Least-squares constant c of y ~ c X^l (log X)^d with l and d fixed.
ModelFit fit_constant(const FitData& data, double power, int log_power, FitWindow window);

enum class ZetaTail { None, WeylPower, WeylPowerLog };
ZetaTail parse_zeta_tail(const std::string& text);
std::string to_string(ZetaTail tail);

struct ZetaValue {
  double s = 0.0;
  double partial_sum = 0.0;
  double tail_estimate = 0.0;
  double total = 0.0;
  double error = 0.0;
  double growth_power = 0.0;  // fitted l of N(E) ~ E^l (0 without tail)
};

// sum lambda_k^{-s} over the trusted eigenvalues plus
// int_{E_c}^inf E^{-s} dN_fit(E). The error is the spread of the tail over
// fits on the upper half and the upper quarter of the spectrum, plus 10% of
// the tail and the discretization error of the partial sum. Throws
// ValidationError when s <= l (divergent tail).
ZetaValue spectral_zeta(const Spectrum& spectrum, double s, ZetaTail tail = ZetaTail::WeylPower);

}  // namespace specasym
