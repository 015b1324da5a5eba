#include "specasym/heat/heat_trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "specasym/core/errors.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/discretize/converge.hpp"

namespace specasym {
namespace {

// Number of eigenvalues inside the reliability cutoff.
std::size_t trusted_count(const Spectrum& s) {
  return static_cast<std::size_t>(
      std::upper_bound(s.eigenvalues.begin(), s.eigenvalues.end(), s.reliability_cutoff) -
      s.eigenvalues.begin());
}

double tail_edge(const Spectrum& s, std::size_t trusted) {
  return std::isfinite(s.reliability_cutoff) ? s.reliability_cutoff
                                             : s.eigenvalues[trusted - 1];
}

}  // namespace

TailMode parse_tail_mode(const std::string& text) {
  if (text == "none") return TailMode::None;
  if (text == "geometric") return TailMode::GeometricGap;
  if (text == "power-law") return TailMode::PowerLaw;
  throw ValidationError("unknown tail mode '" + text + "' (none, geometric, power-law)");
}

double fitted_growth_exponent(const Spectrum& spectrum) {
  const std::size_t n = trusted_count(spectrum);
  require(n >= 8, "growth exponent: needs at least 8 trusted eigenvalues");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  for (std::size_t i = n / 2; i < n; ++i) {
    const double lambda = spectrum.eigenvalues[i];
    require(lambda > 0.0, "growth exponent: eigenvalues must be positive");
    const double x = std::log(lambda);
    const double y = std::log(static_cast<double>(i) + 0.5);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const double denom = m * sxx - sx * sx;
  require(denom > 0.0, "growth exponent: degenerate eigenvalues");
  const double slope = (m * sxy - sx * sy) / denom;
  require(slope > 0.0, "growth exponent: counting function does not grow");
  return slope;
}

double power_law_laplace_tail(double count, double cutoff, double exponent, double t) {
  require(cutoff > 0.0 && exponent > 0.0 && t > 0.0, "power-law tail: positive arguments required");
  const double x = t * cutoff;
  // N_c l x^{-l} Gamma(l, x), in logs to survive large x.
  const double log_q = std::log(std::max(special::gamma_q(exponent, x), 1e-300));
  return count * exponent * std::exp(-exponent * std::log(x) + log_q + special::log_gamma(exponent));
}

TraceValue heat_trace(const Spectrum& spectrum, double t, const HeatTraceOptions& options) {
  require(std::isfinite(t) && t > 0.0, "heat trace: t must be positive");
  require(!spectrum.empty(), "heat trace: empty spectrum");
  const std::size_t n = trusted_count(spectrum);
  require(n > 0, "heat trace: no eigenvalue below the reliability cutoff");
  TraceValue out;
  double discretization = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = spectrum.eigenvalues[i];
    const double w = std::exp(-t * lambda);
    out.partial += w;
    const double rel = i < spectrum.convergence.size() ? spectrum.convergence[i] : 0.0;
    discretization += t * std::abs(rel * lambda) * w;
  }
  switch (options.tail) {
    case TailMode::None:
      break;
    case TailMode::GeometricGap: {
      require(n >= 2, "geometric tail: needs two eigenvalues");
      const double last = spectrum.eigenvalues[n - 1];
      const double gap = last - spectrum.eigenvalues[n - 2];
      require(gap > 0.0, "geometric tail: last gap must be positive");
      const double q = std::exp(-t * gap);
      out.tail = std::exp(-t * last) * q / (1.0 - q);
      break;
    }
    case TailMode::PowerLaw: {
      const double l = fitted_growth_exponent(spectrum);
      out.tail = power_law_laplace_tail(static_cast<double>(n), tail_edge(spectrum, n), l, t);
      break;
    }
  }
  if (out.tail > options.max_tail_fraction * out.partial) {
    std::ostringstream msg;
    msg << "heat trace at t=" << t << ": tail estimate " << out.tail << " exceeds "
        << options.max_tail_fraction << " of the partial sum " << out.partial
        << "; more eigenvalues are needed";
    throw UntrustedRangeError(msg.str());
  }
  out.value = out.partial + out.tail;
  out.error = out.tail + discretization;
  return out;
}

std::string to_string(TraceSource source) {
  switch (source) {
    case TraceSource::SpectrumSum: return "spectrum-sum";
    case TraceSource::SlicedBread: return "sliced-bread";
    case TraceSource::SlicedGT: return "sliced-GT";
    case TraceSource::Classical: return "classical";
    case TraceSource::FeynmanKac: return "feynman-kac";
    case TraceSource::ProductBound: return "product-bound";
  }
  return "unknown";
}

void HeatTraceCurve::add(double t_value, double v, double e) {
  t.push_back(t_value);
  value.push_back(v);
  error.push_back(e);
}

void HeatTraceCurve::write_csv(std::ostream& out) const {
  const auto old = out.precision(17);
  out << "t,value,error,source\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << t[i] << ',' << value[i] << ',' << error[i] << ',' << to_string(source) << '\n';
  }
  out.precision(old);
}

double z_classical_1d(double gamma, double t) {
  require(gamma > 0.0 && t > 0.0, "classical trace: gamma and t must be positive");
  const double mu = (gamma + 2.0) / (2.0 * gamma);
  return special::gamma(1.0 + 1.0 / gamma) / std::sqrt(special::pi) * std::pow(t, -mu);
}

TraceTable::TraceTable(const Spectrum& spectrum, std::optional<Asymptote> small_s,
                       int points_per_decade)
    : asymptote_(small_s) {
  require(spectrum.size() >= 2, "trace table: needs at least two eigenvalues");
  require(points_per_decade >= 10, "trace table: too few points per decade");
  lambda0_ = spectrum.eigenvalues[0];
  gap_ = spectrum.eigenvalues[1] - lambda0_;
  require(lambda0_ > 0.0, "trace table: operator must be positive");
  const double step = std::log(10.0) / points_per_decade;
  // Large-s end: the first excited state is e^{-40} below the ground state.
  s_max_ = 40.0 / std::max(gap_, 1e-3 * lambda0_);
  std::vector<double> ls, lf, re;
  HeatTraceOptions opts;
  for (double log_s = std::log(s_max_);; log_s -= step) {
    TraceValue v;
    try {
      v = heat_trace(spectrum, std::exp(log_s), opts);
    } catch (const UntrustedRangeError&) {
      break;
    }
    ls.push_back(log_s);
    lf.push_back(std::log(v.value));
    re.push_back(v.error / v.value);
    if (ls.size() > 100000) break;
  }
  require(ls.size() >= 3, "trace table: spectrum too short for a trusted range");
  std::reverse(ls.begin(), ls.end());
  std::reverse(lf.begin(), lf.end());
  std::reverse(re.begin(), re.end());
  log_s_ = std::move(ls);
  log_f_ = std::move(lf);
  rel_err_ = std::move(re);
  s_min_ = std::exp(log_s_.front());
  if (asymptote_) {
    require(asymptote_->constant > 0.0, "trace table: asymptotic constant must be positive");
    const double model = asymptote_->constant * std::pow(s_min_, -asymptote_->power);
    asymptote_ratio_ = std::exp(log_f_.front()) / model;
  }
}

TraceValue TraceTable::operator()(double s) const {
  require(std::isfinite(s) && s > 0.0, "trace table: argument must be positive");
  TraceValue out;
  if (s < s_min_) {
    if (!asymptote_) {
      std::ostringstream msg;
      msg << "trace table: argument " << s << " below the trusted range (min " << s_min_ << ")";
      throw UntrustedRangeError(msg.str());
    }
    const double model = asymptote_->constant * std::pow(s, -asymptote_->power);
    out.value = model * asymptote_ratio_;
    out.partial = out.value;
    out.error = out.value * (std::abs(asymptote_ratio_ - 1.0) + rel_err_.front());
    return out;
  }
  if (s >= s_max_) {
    // Ground state dominated: e^{-s lambda0} (1 + O(e^{-s gap})).
    out.value = std::exp(log_f_.back() - lambda0_ * (s - s_max_));
    out.partial = out.value;
    out.error = out.value * (rel_err_.back() + std::exp(-s * gap_));
    return out;
  }
  const double x = std::log(s);
  const auto it = std::upper_bound(log_s_.begin(), log_s_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - log_s_.begin());
  i = std::clamp<std::size_t>(i, 1, log_s_.size() - 1) - 1;
  const double w = (x - log_s_[i]) / (log_s_[i + 1] - log_s_[i]);
  out.value = std::exp((1.0 - w) * log_f_[i] + w * log_f_[i + 1]);
  out.partial = out.value;
  // Linear interpolation error from the local second difference.
  const std::size_t c = std::clamp<std::size_t>(i, 1, log_s_.size() - 2);
  const double second = log_f_[c + 1] - 2.0 * log_f_[c] + log_f_[c - 1];
  const double interp = std::abs(second) / 8.0;
  out.error = out.value * (std::max(rel_err_[i], rel_err_[i + 1]) + interp);
  return out;
}

TraceTable one_d_trace_table(double gamma, double energy, double h) {
  const Spectrum s = spectrum_1d_below(gamma, 1.0, energy, h);
  const double mu = (gamma + 2.0) / (2.0 * gamma);
  const double c = special::gamma(1.0 + 1.0 / gamma) / std::sqrt(special::pi);
  return TraceTable(s, TraceTable::Asymptote{c, mu});
}

}  // namespace specasym
