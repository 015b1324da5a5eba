#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "specasym/core/spectrum.hpp"

namespace specasym {

// How the contribution of eigenvalues above the trusted range is handled.
enum class TailMode {
  None,          // the spectrum is complete
  GeometricGap,  // e^{-t lambda_last} q / (1 - q), q = e^{-t gap_last}
  PowerLaw,      // N(E) ~ N_c (E / E_c)^l beyond the cutoff, l fitted
};

TailMode parse_tail_mode(const std::string& text);

struct TraceValue {
  double value = 0.0;    // partial sum plus tail estimate
  double error = 0.0;    // tail estimate plus discretization error
  double partial = 0.0;  // sum over trusted eigenvalues
  double tail = 0.0;
};

struct HeatTraceOptions {
  TailMode tail = TailMode::PowerLaw;
  // Refuse when the tail exceeds this fraction of the partial sum.
  double max_tail_fraction = 0.10;
};

// Z(t) = sum_k e^{-t lambda_k} over the eigenvalues up to the reliability
// cutoff plus a tail estimate. Throws UntrustedRangeError when the tail is
// too large to trust.
TraceValue heat_trace(const Spectrum& spectrum, double t, const HeatTraceOptions& options = {});

// Least-squares exponent l of N(E) ~ E^l over the upper half of the trusted
// eigenvalues.
double fitted_growth_exponent(const Spectrum& spectrum);

// Tail integral int_{E_c}^inf g(E) dN(E) for N(E) = N_c (E / E_c)^l with
// g(E) = e^{-t E}: N_c l (t E_c)^{-l} Gamma(l, t E_c).
double power_law_laplace_tail(double count, double cutoff, double exponent, double t);

enum class TraceSource { SpectrumSum, SlicedBread, SlicedGT, Classical, FeynmanKac, ProductBound };
std::string to_string(TraceSource source);

struct HeatTraceCurve {
  TraceSource source = TraceSource::SpectrumSum;
  std::vector<double> t;
  std::vector<double> value;
  std::vector<double> error;

  void add(double t_value, double v, double e);
  void write_csv(std::ostream& out) const;
};

// Classical trace of -d^2/dx^2 + |x|^gamma:
// pi^{-1/2} Gamma(1 + 1/gamma) t^{-mu}, mu = (gamma + 2) / (2 gamma).
double z_classical_1d(double gamma, double t);

// Tabulated s -> Tr e^{-s A} for one operator A, on a logarithmic grid,
// interpolated linearly in log-log coordinates (monotone). Below the
// trusted range the table follows an asymptotic law c s^{-l} matched at the
// lowest trusted point.
class TraceTable {
 public:
  struct Asymptote {
    double constant = 0.0;
    double power = 0.0;
  };

  TraceTable(const Spectrum& spectrum, std::optional<Asymptote> small_s = std::nullopt,
             int points_per_decade = 160);

  // Trace value and error (trace error + interpolation error + asymptote
  // mismatch). Throws UntrustedRangeError below the table when no asymptote
  // was supplied.
  TraceValue operator()(double s) const;
  double min_trusted() const { return s_min_; }
  double max_tabulated() const { return s_max_; }
  double ground_energy() const { return lambda0_; }

 private:
  std::vector<double> log_s_;
  std::vector<double> log_f_;
  std::vector<double> rel_err_;
  double s_min_ = 0.0;
  double s_max_ = 0.0;
  double lambda0_ = 0.0;
  double gap_ = 0.0;
  std::optional<Asymptote> asymptote_;
  double asymptote_ratio_ = 1.0;
};

// F^{(gamma)}: trace table of -d^2/dx^2 + |x|^gamma with the classical
// small-s asymptote. The spectrum is computed up to the given energy.
TraceTable one_d_trace_table(double gamma, double energy, double h = 0.02);

}  // namespace specasym
