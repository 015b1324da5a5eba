#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "specasym/core/errors.hpp"
#include "specasym/tauberian/tauberian.hpp"

namespace specasym {
namespace {

struct Prepared {
  std::vector<double> log_x;      // log X
  std::vector<double> log_log_x;  // log log X
  std::vector<double> log_y;
};

Prepared prepare(const FitData& data, FitWindow w, bool need_log_log) {
  require(data.x.size() == data.y.size(), "fit: x and y lengths differ");
  require(w.lo < w.hi, "fit: empty window");
  Prepared p;
  for (std::size_t i = 0; i < data.x.size(); ++i) {
    const double x = data.x[i];
    if (x < w.lo || x > w.hi) continue;
    require(data.y[i] > 0.0, "fit: values must be positive");
    const double big = data.regime == Regime::Counting ? x : 1.0 / x;
    require(big > 0.0, "fit: abscissae must be positive");
    if (need_log_log) require(big > 1.0, "fit: log correction needs E > 1 (or t < 1)");
    p.log_x.push_back(std::log(big));
    p.log_log_x.push_back(big > 1.0 ? std::log(std::log(big)) : 0.0);
    p.log_y.push_back(std::log(data.y[i]));
  }
  if (p.log_x.size() < 10) {
    std::ostringstream msg;
    msg << "fit: only " << p.log_x.size() << " samples in the window [" << w.lo << ", " << w.hi
        << "], at least 10 are needed";
    throw ValidationError(msg.str());
  }
  return p;
}

ModelFit fit_fixed_d(const Prepared& p, int d) {
  const std::size_t n = p.log_x.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = p.log_x[i];
    const double y = p.log_y[i] - d * p.log_log_x[i];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  require(denom > 0.0, "fit: window has a single abscissa");
  ModelFit m;
  m.log_power = d;
  m.power = (n * sxy - sx * sy) / denom;
  const double log_c = (sy - m.power * sx) / n;
  m.constant = std::exp(log_c);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = p.log_y[i] - d * p.log_log_x[i] - log_c - m.power * p.log_x[i];
    ss += r * r;
  }
  m.residual = std::sqrt(ss / n);
  return m;
}

}  // namespace

FitData FitData::counting(const Spectrum& spectrum) {
  FitData d;
  d.regime = Regime::Counting;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (spectrum.eigenvalues[i] > spectrum.reliability_cutoff) break;
    d.x.push_back(spectrum.eigenvalues[i]);
    // Midpoint of the step at the eigenvalue.
    d.y.push_back(static_cast<double>(i) + 0.5);
  }
  d.reliable_limit = std::isfinite(spectrum.reliability_cutoff) || d.x.empty()
                         ? spectrum.reliability_cutoff
                         : d.x.back();
  return d;
}

const ModelFit& FitResult::model(int d) const {
  for (const auto& m : models) {
    if (m.log_power == d) return m;
  }
  throw ValidationError("fit result: no model with log power " + std::to_string(d));
}

FitWindow default_window(const FitData& data) {
  require(!data.x.empty(), "fit: no data");
  const auto [lo_it, hi_it] = std::minmax_element(data.x.begin(), data.x.end());
  if (data.regime == Regime::Counting) {
    const double hi = data.reliable_limit > 0.0 ? std::min(data.reliable_limit, *hi_it) : *hi_it;
    return {10.0 * *lo_it, hi};
  }
  const double lo = data.reliable_limit > 0.0 ? std::max(data.reliable_limit, *lo_it) : *lo_it;
  return {lo, 0.1 * *hi_it};
}

FitResult fit_asymptotic(const FitData& data, const std::vector<int>& d_candidates,
                         std::optional<FitWindow> window) {
  require(!d_candidates.empty(), "fit: no log-power candidates");
  const FitWindow w = window ? *window : default_window(data);
  if (data.regime == Regime::Counting && data.reliable_limit > 0.0) {
    require(w.hi <= data.reliable_limit * (1.0 + 1e-12),
            "fit: window extends above the reliability cutoff");
  }
  const bool need_log_log =
      std::any_of(d_candidates.begin(), d_candidates.end(), [](int d) { return d != 0; });
  const Prepared p = prepare(data, w, need_log_log);
  if (need_log_log) {
    const auto [lo, hi] = std::minmax_element(p.log_log_x.begin(), p.log_log_x.end());
    if (*hi - *lo < 0.05) {
      std::ostringstream msg;
      msg << "fit: log log range " << *hi - *lo
          << " is too small to separate log corrections; widen the window";
      throw ValidationError(msg.str());
    }
  }
  FitResult r;
  r.window = w;
  r.samples = p.log_x.size();
  double best = std::numeric_limits<double>::infinity();
  for (int d : d_candidates) {
    const ModelFit m = fit_fixed_d(p, d);
    r.models.push_back(m);
    if (m.residual < best) {
      best = m.residual;
      r.law = AsymptoticLaw{m.power, d, m.constant, data.regime};
      r.residual = m.residual;
    }
  }
  return r;
}

ModelFit fit_constant(const FitData& data, double power, int log_power, FitWindow window) {
  const Prepared p = prepare(data, window, log_power != 0);
  const std::size_t n = p.log_x.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += p.log_y[i] - power * p.log_x[i] - log_power * p.log_log_x[i];
  }
  const double log_c = sum / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = p.log_y[i] - power * p.log_x[i] - log_power * p.log_log_x[i] - log_c;
    ss += r * r;
  }
  return ModelFit{log_power, power, std::exp(log_c), std::sqrt(ss / n)};
}

}  // namespace specasym
