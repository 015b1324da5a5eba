#include "specasym/fk/fk.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "specasym/core/errors.hpp"
#include "specasym/core/quadrature.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/fk/bridges.hpp"
#include "specasym/fk/log_volume.hpp"
#include "specasym/fk/philox.hpp"
#include "specasym/heat/slice.hpp"

namespace specasym {
namespace {

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 32) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

struct Moments {
  double mean = 0.0;
  double stderr_ = 0.0;
};

Moments moments(const std::vector<double>& w) {
  const std::size_t n = w.size();
  Moments m;
  m.mean = pairwise_sum(w.data(), n) / n;
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = (w[i] - m.mean) * (w[i] - m.mean);
  const double var = n > 1 ? pairwise_sum(sq.data(), n) / (n - 1) : 0.0;
  m.stderr_ = std::sqrt(var / n);
  return m;
}

void validate(double t, const McParams& p) {
  require(std::isfinite(t) && t > 0.0, "Feynman-Kac: t must be positive");
  require(p.paths >= 2, "Feynman-Kac: at least two paths are needed");
  require(p.steps >= 16, "Feynman-Kac: steps must be at least 16");
}

// Per-path weight given the anchor x and the bridge (relative to x).
using PathWeight = std::function<double(const std::vector<double>& x,
                                        const std::vector<double>& bridge, bool& kept)>;

FkEstimate run(std::size_t n, double t, const McParams& params, const std::vector<double>& scale,
               const PathWeight& weight) {
  std::vector<double> values(params.paths);
  std::vector<double> x(n), bridge;
  std::size_t kept_count = 0;
  const double pref = std::pow(4.0 * special::pi * t, -0.5 * static_cast<double>(n));
  for (std::size_t p = 0; p < params.paths; ++p) {
    PhiloxStream anchor(params.seed, static_cast<std::uint32_t>(StreamId::Anchor), p);
    double density = 1.0;
    for (std::size_t a = 0; a < n; ++a) {
      const double u = anchor.uniform();
      x[a] = scale[a] * std::tan(special::pi * (u - 0.5));
      const double r = x[a] / scale[a];
      density *= 1.0 / (special::pi * scale[a] * (1.0 + r * r));
    }
    sample_bridge(params.seed, p, t, params.steps, n, bridge);
    bool kept = true;
    const double w = weight(x, bridge, kept);
    if (kept) ++kept_count;
    values[p] = pref * w / density;
  }
  const Moments m = moments(values);
  FkEstimate e;
  e.mean = m.mean;
  e.stderr_ = m.stderr_;
  e.paths_kept = static_cast<double>(kept_count) / params.paths;
  e.t = t;
  e.paths = params.paths;
  e.steps = params.steps;
  e.seed = params.seed;
  e.convention = kBridgeConvention;
  return e;
}

// Trapezoidal 1/2 int_0^{2t} V along the path x + b.
double half_action(const FkPotential& v, const std::vector<double>& x,
                   const std::vector<double>& bridge, int steps, double t) {
  const std::size_t n = x.size();
  std::vector<double> y(n);
  const double dt = 2.0 * t / steps;
  double sum = 0.0;
  for (int k = 0; k <= steps; ++k) {
    for (std::size_t a = 0; a < n; ++a) y[a] = x[a] + bridge[k * n + a];
    const double w = (k == 0 || k == steps) ? 0.5 : 1.0;
    sum += w * v(y.data());
  }
  return 0.5 * dt * sum;
}

}  // namespace

FkPotential FkPotential::product(const ExponentVector& alpha) {
  return FkPotential{alpha.values(), 1.0};
}

FkPotential FkPotential::one_d(double gamma, double g) {
  require(gamma > 0.0 && g > 0.0, "Feynman-Kac potential: gamma and g must be positive");
  return FkPotential{{gamma}, g};
}

double FkPotential::operator()(const double* x) const {
  double v = g;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double ax = std::abs(x[i]);
    v *= alpha[i] == 2.0 ? ax * ax : alpha[i] == 1.0 ? ax : std::pow(ax, alpha[i]);
  }
  return v;
}

std::string FkPotential::describe() const {
  std::ostringstream out;
  out << g;
  for (std::size_t i = 0; i < alpha.size(); ++i) out << " |x" << i + 1 << "|^" << alpha[i];
  return out.str();
}

std::vector<double> default_anchor_scale(const FkPotential& v, double t) {
  require(t > 0.0, "anchor scale: t must be positive");
  const std::size_t n = v.dimension();
  std::vector<double> s(n);
  if (n == 1) {
    s[0] = std::max(0.5, std::pow(1.0 / (t * v.g), 1.0 / v.alpha[0]));
    return s;
  }
  const ExponentVector alpha(std::span<const double>(v.alpha));
  const auto factors = separable_factors(alpha);
  const double total = alpha.sum();
  for (std::size_t j = 0; j < n; ++j) {
    const double p = total - alpha[j];
    const double c = factors[j].coupling * std::pow(v.g, 2.0 / (p + 2.0));
    s[j] = std::max(0.5, std::pow(1.0 / (t * c), 1.0 / factors[j].eta));
  }
  return s;
}

FkEstimate fk_trace(const FkPotential& v, double t, const McParams& params) {
  validate(t, params);
  require(v.dimension() >= 1, "Feynman-Kac: potential needs at least one axis");
  const auto scale = params.anchor_scale.empty() ? default_anchor_scale(v, t) : params.anchor_scale;
  require(scale.size() == v.dimension(), "Feynman-Kac: anchor_scale has the wrong length");
  FkEstimate e = run(v.dimension(), t, params, scale,
                     [&](const std::vector<double>& x, const std::vector<double>& b, bool&) {
                       return std::exp(-half_action(v, x, b, params.steps, t));
                     });
  if (!(e.stderr_ <= 0.25 * e.mean)) {
    std::ostringstream msg;
    msg << "Feynman-Kac: stderr " << e.stderr_ << " exceeds 25% of the mean " << e.mean
        << "; increase paths";
    throw ConvergenceError(msg.str());
  }
  return e;
}

ConfinementMode parse_confinement_mode(const std::string& text) {
  if (text == "none") return ConfinementMode::None;
  if (text == "xn-band") return ConfinementMode::XnBand;
  if (text == "all-band") return ConfinementMode::AllBand;
  throw ValidationError("unknown confinement mode '" + text + "' (none, xn-band, all-band)");
}

std::string to_string(ConfinementMode mode) {
  switch (mode) {
    case ConfinementMode::None: return "none";
    case ConfinementMode::XnBand: return "xn-band";
    case ConfinementMode::AllBand: return "all-band";
  }
  return "unknown";
}

double kappa(double t, double c) {
  require(t > 0.0 && t != 1.0, "kappa: t must be positive and different from 1");
  return std::exp(c / std::abs(std::log(t)));
}

namespace {

// int over {every |x_i| >= a} of e^{-s V(x)} dx.
double outer_region_integral(const ExponentVector& alpha, double s, double a) {
  const std::size_t n = alpha.size();
  if (alpha.all_equal()) {
    const double a0 = alpha[0];
    return log_volume_rhs([&](double p) { return std::exp(-s * std::pow(p, a0)); }, a,
                          static_cast<int>(n));
  }
  require(n == 2, "all-band bound: unequal exponents are supported for n = 2 only");
  const double a1 = alpha[0], a2 = alpha[1];
  // Inner x_2 integral in closed form: c^{-1/a2} Gamma(1/a2, c a^{a2}) / a2.
  auto inner = [&](double x1) {
    const double c = s * std::pow(x1, a1);
    return std::pow(c, -1.0 / a2) * special::upper_gamma(1.0 / a2, c * std::pow(a, a2)) / a2;
  };
  QuadratureOptions q;
  q.rel_tol = 1e-10;
  return 4.0 * integrate_to_infinity_or_throw(inner, a, q);
}

}  // namespace

FkEstimate fk_confined_lower(const ExponentVector& alpha, double t,
                             const ConfinementPolicy& policy, const McParams& params) {
  validate(t, params);
  require(alpha.size() >= 2, "confined bound: n must be at least 2");
  const std::size_t n = alpha.size();
  FkEstimate e;
  if (policy.mode == ConfinementMode::None) {
    throw ValidationError("confined bound: a confinement mode is required");
  }
  if (policy.mode == ConfinementMode::XnBand) {
    require(policy.band > 0.0, "confined bound: band must be positive");
    const FkPotential v = FkPotential::product(alpha);
    const auto scale =
        params.anchor_scale.empty() ? default_anchor_scale(v, t) : params.anchor_scale;
    const double dt = 2.0 * t / params.steps;
    e = run(n, t, params, scale,
            [&](const std::vector<double>& x, const std::vector<double>& b, bool& kept) {
              for (int k = 0; k <= params.steps; ++k) {
                if (std::abs(b[k * n + n - 1]) > policy.band) {
                  kept = false;
                  return 0.0;
                }
              }
              const double slab = std::pow(std::abs(x[n - 1]) + policy.band, alpha[n - 1]);
              double sum = 0.0;
              for (int k = 0; k <= params.steps; ++k) {
                double p = slab;
                for (std::size_t i = 0; i + 1 < n; ++i) {
                  p *= std::pow(std::abs(x[i] + b[k * n + i]), alpha[i]);
                }
                sum += (k == 0 || k == params.steps ? 0.5 : 1.0) * p;
              }
              return std::exp(-0.5 * dt * sum);
            });
    e.mode = to_string(policy.mode);
  } else {
    require(t < 1.0, "all-band bound: requires t < 1");
    const double c = policy.kappa_c > 0.0 ? policy.kappa_c : static_cast<double>(n);
    const double log_t = std::abs(std::log(t));
    const double delta = std::sqrt(t) * log_t;
    const double a = std::sqrt(t) * log_t * log_t;
    // Probability that all n independent bridges stay inside the band.
    std::vector<double> keep(params.paths);
    std::vector<double> bridge;
    std::size_t kept_count = 0;
    for (std::size_t p = 0; p < params.paths; ++p) {
      sample_bridge(params.seed, p, t, params.steps, n, bridge);
      double sup = 0.0;
      for (double b : bridge) sup = std::max(sup, std::abs(b));
      keep[p] = sup <= delta ? 1.0 : 0.0;
      kept_count += sup <= delta;
    }
    const Moments m = moments(keep);
    const double k = kappa(t, c);
    const double region = outer_region_integral(alpha, t * k, a);
    const double pref = std::pow(4.0 * special::pi * t, -0.5 * static_cast<double>(n));
    e.mean = pref * m.mean * region;
    e.stderr_ = pref * m.stderr_ * region;
    e.paths_kept = static_cast<double>(kept_count) / params.paths;
    e.t = t;
    e.paths = params.paths;
    e.steps = params.steps;
    e.seed = params.seed;
    e.convention = kBridgeConvention;
    e.kappa = k;
    e.rigorous = c >= alpha.sum();
    e.mode = to_string(policy.mode);
  }
  if (e.paths_kept == 0.0) throw ConvergenceError("confined bound: no path was kept");
  return e;
}

}  // namespace specasym
