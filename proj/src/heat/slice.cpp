#include "specasym/heat/slice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "specasym/core/errors.hpp"
#include "specasym/core/quadrature.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/core/theorems.hpp"
#include "specasym/discretize/converge.hpp"

namespace specasym {
namespace {

TraceTable classical_1d_table(const Spectrum& s, double gamma) {
  const double mu = (gamma + 2.0) / (2.0 * gamma);
  const double c = special::gamma(1.0 + 1.0 / gamma) / std::sqrt(special::pi);
  return TraceTable(s, TraceTable::Asymptote{c, mu});
}

std::size_t trusted_count(const Spectrum& s) {
  return static_cast<std::size_t>(
      std::upper_bound(s.eigenvalues.begin(), s.eigenvalues.end(), s.reliability_cutoff) -
      s.eigenvalues.begin());
}

QuadratureOptions loose() {
  QuadratureOptions q;
  q.abs_tol = 1e-12;
  q.rel_tol = 1e-8;
  return q;
}

// int_a^b of f by a plain adaptive rule, or with x = u^{1/(1-beta)} when
// a = 0 to remove the x^{-beta} singularity.
QuadratureResult integrate_slice(const Integrand& f, double b, double beta) {
  const double p = 1.0 / (1.0 - beta);
  auto g = [&](double u) {
    const double x = std::pow(u, p);
    return f(x) * p * std::pow(u, p - 1.0);
  };
  return integrate(g, 0.0, std::pow(b, 1.0 - beta), loose());
}

}  // namespace

SliceArtifacts make_slice_artifacts(const ExponentVector& alpha,
                                    const SliceArtifactOptions& options) {
  require(alpha.size() == 2, "sliced bounds: only n = 2 is supported");
  const double d = dim_exponent(alpha);
  const double gamma = 1.0 / d;
  Spectrum base = spectrum_1d_below(alpha[0], 1.0, options.base_energy, options.base_spacing);
  TraceTable base_table = classical_1d_table(base, alpha[0]);
  TraceTable one_d = one_d_trace_table(gamma, options.one_d_energy, options.one_d_spacing);
  return SliceArtifacts{alpha, d, d / (d + 0.5), std::move(base), std::move(base_table),
                        std::move(one_d)};
}

TraceValue slice_function(const SliceArtifacts& art, double x_n, double t) {
  require(t > 0.0, "slice function: t must be positive");
  require(x_n != 0.0 && std::isfinite(x_n), "slice function: x_n must be finite and nonzero");
  return art.base_table(t * std::pow(std::abs(x_n), 1.0 / art.d_n));
}

TraceValue z_sliced_bread(const SliceArtifacts& art, double t) {
  require(t > 0.0, "sliced bread: t must be positive");
  const Spectrum& base = art.base;
  const std::size_t n = trusted_count(base);
  require(n >= 8, "sliced bread: base spectrum too short");
  TraceValue out;
  for (std::size_t j = 0; j < n; ++j) {
    const double eps = base.eigenvalues[j];
    const TraceValue v = art.one_d(t * std::pow(eps, art.b_n));
    out.partial += v.value;
    out.error += v.error;
    const double rel = j < base.convergence.size() ? std::abs(base.convergence[j]) : 0.0;
    if (rel > 0.0) {
      const TraceValue moved = art.one_d(t * std::pow(eps * (1.0 + rel), art.b_n));
      out.error += std::abs(v.value - moved.value);
    }
  }
  const double edge = std::isfinite(base.reliability_cutoff) ? base.reliability_cutoff
                                                             : base.eigenvalues[n - 1];
  const double l = fitted_growth_exponent(base);
  const double count = static_cast<double>(n);
  auto density = [&](double e) {
    return art.one_d(t * std::pow(e, art.b_n)).value * count * l * std::pow(e / edge, l - 1.0) /
           edge;
  };
  const auto tail = integrate_to_infinity(density, edge, loose());
  out.tail = tail.value;
  if (out.tail > 0.10 * out.partial) {
    std::ostringstream msg;
    msg << "sliced bread at t=" << t << ": base-spectrum tail " << out.tail
        << " exceeds 10% of the sum; extend the base spectrum";
    throw UntrustedRangeError(msg.str());
  }
  out.value = out.partial + out.tail;
  out.error += out.tail + tail.error;
  return out;
}

SgtResult sliced_gt_divergence(const ExponentVector& alpha) {
  require(alpha.size() >= 2, "sliced Golden-Thompson: n must be at least 2");
  SgtResult r;
  const std::size_t n = alpha.size();
  const double beta = alpha[n - 1] / alpha[n - 2];
  if (beta >= 1.0 - 1e-12) {
    r.divergent = true;
    std::ostringstream msg;
    msg << "alpha_n = alpha_{n-1} = " << alpha[n - 1]
        << ": F(x_n, t) ~ C |x_n|^{-alpha_n/alpha_{n-1}} = C |x_n|^{-1} as x_n -> 0, "
           "so int_0 F(x_n, t) dx_n diverges logarithmically";
    r.certificate = msg.str();
  }
  return r;
}

SgtResult z_sliced_gt(const SliceArtifacts& art, double t) {
  require(t > 0.0, "sliced Golden-Thompson: t must be positive");
  SgtResult r = sliced_gt_divergence(art.alpha);
  if (r.divergent) return r;
  const std::size_t n = art.alpha.size();
  const double beta = art.alpha[n - 1] / art.alpha[n - 2];
  auto value = [&](double x) { return slice_function(art, x, t).value; };
  auto error = [&](double x) { return slice_function(art, x, t).error; };
  const auto near = integrate_slice(value, 1.0, beta);
  const auto near_err = integrate_slice(error, 1.0, beta);
  const auto far = integrate_to_infinity(value, 1.0, loose());
  const auto far_err = integrate_to_infinity(error, 1.0, loose());
  const double pref = 1.0 / std::sqrt(special::pi * t);
  r.value.value = pref * (near.value + far.value);
  r.value.partial = r.value.value;
  r.value.error = pref * (near.error + far.error + near_err.value + far_err.value);
  return r;
}

double z_sliced_gt_closed_form(double d_n, double zeta_value, double t) {
  require(d_n > 0.0 && t > 0.0, "sliced Golden-Thompson closed form: positive arguments required");
  return special::gamma(d_n + 1.0) * zeta_value * std::pow(t, -d_n) / std::sqrt(special::pi * t);
}

TraceValue near_origin_slice_mass(const SliceArtifacts& art, double t) {
  const std::size_t n = art.alpha.size();
  const double beta = std::min(art.alpha[n - 1] / art.alpha[n - 2], 1.0 - 1e-9);
  auto value = [&](double x) { return slice_function(art, x, t).value; };
  auto error = [&](double x) { return slice_function(art, x, t).error; };
  const auto v = integrate_slice(value, 1.0, beta);
  const auto e = integrate_slice(error, 1.0, beta);
  const double scale = std::pow(t, art.d_n);
  TraceValue out;
  out.value = scale * v.value;
  out.partial = out.value;
  out.error = scale * (v.error + e.value);
  return out;
}

DivergenceCertificate z_classical_product_divergence(const ExponentVector& alpha) {
  DivergenceCertificate c;
  const std::size_t n = alpha.size();
  require(n >= 2,
          "classical product divergence: n = 1 has a finite classical trace (use z_classical_1d)");
  c.divergent = true;
  std::ostringstream msg;
  msg.precision(6);
  msg << "after integrating xi and x_n the integrand is t^{-n/2 - 1/alpha_n} prod_{j<n} "
         "|x_j|^{e_j};";
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double e = -alpha[j] / alpha[n - 1];
    c.exponents.push_back(e);
    msg << " e_" << j + 1 << " = " << e << " (int_0^inf |x|^{e} dx diverges "
        << (e < -1.0 ? "at 0" : e > -1.0 ? "at infinity" : "at 0 and at infinity") << ")";
    if (j + 2 < n) msg << ',';
  }
  c.reason = msg.str();
  return c;
}

std::vector<SeparableBound::Factor> separable_factors(const ExponentVector& alpha) {
  require(alpha.size() >= 2, "separable bound: n must be at least 2");
  std::vector<SeparableBound::Factor> out;
  const double total = alpha.sum();
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const double p = total - alpha[j];
    out.push_back({2.0 * alpha[j] / (p + 2.0), transverse_ground_energy(alpha, j)});
  }
  return out;
}

SeparableBound::SeparableBound(const ExponentVector& alpha, double energy, double spacing)
    : n_(alpha.size()), factors_(separable_factors(alpha)) {
  for (const auto& f : factors_) tables_.push_back(one_d_trace_table(f.eta, energy, spacing));
}

TraceValue SeparableBound::operator()(double t) const {
  require(t > 0.0, "separable bound: t must be positive");
  double value = 1.0;
  double rel = 0.0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto& f = factors_[j];
    // Spectrum of (1/n)(-d^2 + c|x|^eta) is (1/n) c^{2/(eta+2)} times that
    // of -d^2 + |x|^eta.
    const double s = t / static_cast<double>(n_) * std::pow(f.coupling, 2.0 / (f.eta + 2.0));
    const TraceValue v = tables_[j](s);
    value *= v.value;
    rel += v.error / v.value;
  }
  TraceValue out;
  out.value = value;
  out.partial = value;
  out.error = value * rel;
  return out;
}

}  // namespace specasym
