#include "specasym/discretize/converge.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "specasym/core/errors.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/discretize/operator.hpp"

namespace specasym {
namespace {

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

std::vector<double> extrapolate(const std::vector<double>& coarse, const std::vector<double>& fine,
                                double ratio, double order) {
  const double factor = 1.0 / (std::pow(ratio, order) - 1.0);
  std::vector<double> out(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) out[i] = fine[i] + (fine[i] - coarse[i]) * factor;
  return out;
}

std::vector<double> relative_change(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::abs(a[i] - b[i]) / std::abs(a[i]);
  return out;
}

double first_spacing(const GridSpec& g) { return g.axes.front().spacing(); }

template <class F>
double memoized(std::map<std::string, double>& cache, std::mutex& mutex, const std::string& key,
                F compute) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double value = compute();
  std::lock_guard<std::mutex> lock(mutex);
  cache[key] = value;
  return value;
}

std::vector<double> without(const ExponentVector& alpha, std::size_t axis) {
  std::vector<double> rest;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i != axis) rest.push_back(alpha[i]);
  }
  return rest;
}

}  // namespace

Spectrum converge_spectrum(const GridEigenvalues& builder, const GridSpec& base, std::size_t k,
                           const ConvergeOptions& options) {
  require(options.rel_tol > 0.0, "converge_spectrum: rel_tol must be positive");
  require(options.max_refinements >= 1, "converge_spectrum: need at least one refinement");
  require(options.ratio > 1.0, "converge_spectrum: refinement ratio must exceed 1");
  require(k >= 1, "converge_spectrum: k must be positive");

  GridSpec grid = base;
  std::vector<double> prev_raw, prev_extrap;
  double prev_h = 0.0;
  double last_change = 0.0;
  for (int level = 0; level <= options.max_refinements; ++level) {
    std::vector<double> values = builder(grid);
    if (values.size() < k) {
      throw ConvergenceError("converge_spectrum: builder returned " + std::to_string(values.size()) +
                             " of " + std::to_string(k) + " eigenvalues");
    }
    values.resize(k);
    const double h = first_spacing(grid);
    if (level > 0) {
      const double ratio = prev_h / h;
      std::vector<double> change = relative_change(values, prev_raw);
      std::vector<double> result = values;
      if (options.richardson) {
        result = extrapolate(prev_raw, values, ratio, options.order);
        if (!prev_extrap.empty()) change = relative_change(result, prev_extrap);
        prev_extrap = result;
      }
      last_change = max_of(change);
      if (last_change < options.rel_tol) {
        Spectrum s;
        s.eigenvalues = result;
        s.convergence = change;
        s.reliability_cutoff = s.max();
        return s;
      }
    }
    prev_raw = values;
    prev_h = h;
    if (level < options.max_refinements) grid = grid.refined(options.ratio);
  }
  std::ostringstream msg;
  msg << "converge_spectrum: relative change " << last_change << " still above " << options.rel_tol
      << " after " << options.max_refinements << " refinements";
  throw ConvergenceError(msg.str());
}

Spectrum richardson_combine(const std::vector<double>& coarse, const std::vector<double>& fine,
                            double ratio, double order) {
  require(ratio > 1.0, "richardson: ratio must exceed 1");
  require(order > 0.0, "richardson: order must be positive");
  const std::size_t n = std::min(coarse.size(), fine.size());
  std::vector<double> c(coarse.begin(), coarse.begin() + n);
  std::vector<double> f(fine.begin(), fine.begin() + n);
  Spectrum s;
  s.eigenvalues = extrapolate(c, f, ratio, order);
  s.convergence = relative_change(f, c);
  // Keep pairs together while sorting.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return s.eigenvalues[a] < s.eigenvalues[b]; });
  Spectrum sorted;
  for (std::size_t i : perm) {
    sorted.eigenvalues.push_back(s.eigenvalues[i]);
    sorted.convergence.push_back(s.convergence[i]);
  }
  return sorted;
}

double fd_error_order(double gamma) { return std::min(2.0, 1.0 + gamma); }

double half_width_1d(double gamma, double g, double energy) {
  require(gamma > 0.0 && g > 0.0, "half_width_1d: gamma and g must be positive");
  energy = std::max(energy, 1e-3);
  const double turning = std::pow(energy / g, 1.0 / gamma);
  // March outward until the WKB decay exponent reaches 20.
  const double dx = std::max(turning, 1.0) / 400.0;
  double x = turning;
  double action = 0.0;
  while (action < 20.0) {
    const double v = g * std::pow(x + 0.5 * dx, gamma) - energy;
    action += std::sqrt(std::max(v, 0.0)) * dx;
    x += dx;
  }
  return std::max(x, 2.0);
}

double wkb_eigenvalue_1d(double gamma, double g, std::size_t k) {
  const double b = special::gamma(1.0 + 1.0 / gamma) * special::gamma(1.5) /
                   special::gamma(1.0 / gamma + 1.5);
  const double rhs = special::pi * (static_cast<double>(k) + 0.5) * std::pow(g, 1.0 / gamma) / (2.0 * b);
  return std::pow(rhs, 1.0 / (0.5 + 1.0 / gamma));
}

Spectrum converged_spectrum_1d(double gamma, double g, std::size_t k, double rel_tol,
                               int max_refinements) {
  require(k >= 1, "converged_spectrum_1d: k must be positive");
  const double top = 1.3 * wkb_eigenvalue_1d(gamma, g, k - 1) + 1.0;
  const double L = half_width_1d(gamma, g, top);
  const double h0 = std::min(0.05, 0.3 / std::sqrt(top));
  GridSpec base;
  base.axes = {AxisGrid::with_spacing(L, h0)};
  while (static_cast<std::size_t>(base.axes[0].points) < 8 * k) base = base.refined(2.0);
  auto builder = [gamma, g, k](const GridSpec& grid) {
    return build_operator_1d(gamma, g, grid.axes[0]).tridiagonal().lowest(k);
  };
  ConvergeOptions opts;
  opts.rel_tol = rel_tol;
  opts.max_refinements = max_refinements;
  opts.order = fd_error_order(gamma);
  Spectrum s = converge_spectrum(builder, base, k, opts);
  std::ostringstream label;
  label << "-d2/dx2 + " << g << "|x|^" << gamma;
  s.label = label.str();
  return s;
}

Spectrum spectrum_1d_below(double gamma, double g, double energy, double h) {
  require(energy > 0.0, "spectrum_1d_below: energy must be positive");
  const double L = half_width_1d(gamma, g, energy);
  const AxisGrid fine = AxisGrid::with_spacing(L, h);
  const AxisGrid coarse = AxisGrid::with_spacing(L, 2.0 * h);
  // Even and odd sectors separately: half the size and half the count each.
  const auto both = [&](const AxisGrid& grid, double e) {
    auto v = build_operator_1d(gamma, g, grid, Parity::Even).tridiagonal().below(e);
    const auto odd = build_operator_1d(gamma, g, grid, Parity::Odd).tridiagonal().below(e);
    v.insert(v.end(), odd.begin(), odd.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto f = both(fine, energy);
  const auto c = both(coarse, 1.05 * energy + 1.0);
  Spectrum s = richardson_combine(c, f, coarse.spacing() / fine.spacing(), fd_error_order(gamma));
  double shift = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    shift = std::max(shift, std::abs(s.eigenvalues[i] - f[std::min(i, f.size() - 1)]));
  }
  s.reliability_cutoff = energy - 2.0 * shift;
  std::ostringstream label;
  label << "-d2/dx2 + " << g << "|x|^" << gamma;
  s.label = label.str();
  return s;
}

double ground_energy_1d(double nu) {
  require(std::isfinite(nu) && nu > 0.0, "ground_energy_1d: nu must be positive");
  static std::map<std::string, double> cache;
  static std::mutex mutex;
  std::ostringstream key;
  key.precision(17);
  key << nu;
  return memoized(cache, mutex, key.str(),
                  [nu] { return converged_spectrum_1d(nu, 1.0, 1, 2e-8, 8).eigenvalues[0]; });
}

double transverse_ground_energy(const ExponentVector& alpha, std::size_t axis) {
  require(alpha.size() >= 2 && alpha.size() <= 3, "transverse ground energy: n must be 2 or 3");
  require(axis < alpha.size(), "transverse ground energy: axis out of range");
  const auto rest = without(alpha, axis);
  if (rest.size() == 1) return ground_energy_1d(rest[0]);
  static std::map<std::string, double> cache;
  static std::mutex mutex;
  const ExponentVector base(rest);
  return memoized(cache, mutex, "H:" + base.to_string(), [&base] {
    NdSpectrumOptions opts;
    opts.energy = 1.0;
    opts.spacing = {0.05, 0.05};
    // Grow the energy window until the ground state is inside it.
    for (int tries = 0; tries < 8; ++tries) {
      const Spectrum s = spectrum_nd(base, opts);
      if (!s.empty()) return s.eigenvalues[0];
      opts.energy *= 2.0;
    }
    throw ConvergenceError("transverse ground energy: no eigenvalue found");
  });
}

double channel_threshold(const ExponentVector& alpha, std::size_t axis, double x) {
  require(axis < alpha.size(), "channel threshold: axis out of range");
  const double p = alpha.sum() - alpha[axis];
  return std::pow(std::abs(x), 2.0 * alpha[axis] / (p + 2.0)) * transverse_ground_energy(alpha, axis);
}

namespace {

// Lowest Dirichlet eigenvalue of the unit cross-section
// {prod_{i != axis} |y_i|^{beta_i} < 1}, beta = alpha / alpha_n.
double unit_cross_section_energy(const ExponentVector& alpha, std::size_t axis) {
  const auto rest = without(alpha, axis);
  if (rest.size() == 1) return 0.25 * special::pi * special::pi;
  static std::map<std::string, double> cache;
  static std::mutex mutex;
  const ExponentVector base(rest);
  return memoized(cache, mutex, "D:" + base.to_string(), [&base] {
    NdSpectrumOptions opts;
    opts.energy = 8.0;
    opts.spacing = {0.03, 0.03};
    for (int tries = 0; tries < 8; ++tries) {
      const Spectrum s = dirichlet_spectrum_nd(base, opts);
      if (!s.empty()) return s.eigenvalues[0];
      opts.energy *= 2.0;
    }
    throw ConvergenceError("cross-section ground energy: no eigenvalue found");
  });
}

double beta_rest_sum(const ExponentVector& alpha, std::size_t axis) {
  return (alpha.sum() - alpha[axis]) / alpha.smallest();
}

}  // namespace

double dirichlet_channel_threshold(const ExponentVector& alpha, std::size_t axis, double x) {
  require(axis < alpha.size(), "dirichlet channel threshold: axis out of range");
  const double beta_axis = alpha[axis] / alpha.smallest();
  return std::pow(std::abs(x), 2.0 * beta_axis / beta_rest_sum(alpha, axis)) *
         unit_cross_section_energy(alpha, axis);
}

double reliability_cutoff_nd(const ExponentVector& alpha, const GridSpec& grid, double safety,
                             double potential_cap) {
  require(safety >= 1.0, "reliability cutoff: safety factor must be at least 1");
  double cutoff = potential_cap / safety;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    cutoff = std::min(cutoff, channel_threshold(alpha, j, grid.axes[j].half_width) / safety);
  }
  return cutoff;
}

double reliability_cutoff_dirichlet(const ExponentVector& alpha, const GridSpec& grid,
                                    double safety) {
  require(safety >= 1.0, "reliability cutoff: safety factor must be at least 1");
  double cutoff = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    cutoff = std::min(cutoff, dirichlet_channel_threshold(alpha, j, grid.axes[j].half_width) / safety);
  }
  return cutoff;
}

BoxPlan plan_box_nd(const ExponentVector& alpha, double energy, const std::vector<double>& spacing,
                    const BoxOptions& options) {
  require(energy > 0.0, "box plan: energy must be positive");
  require(spacing.size() == alpha.size(), "box plan: one spacing per axis required");
  BoxPlan plan;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const double p = alpha.sum() - alpha[j];
    const double lambda0 = transverse_ground_energy(alpha, j);
    double L = std::pow(options.safety * energy / lambda0, (p + 2.0) / (2.0 * alpha[j]));
    L = std::max(L, options.min_half_width);
    plan.grid.axes.push_back(AxisGrid::with_spacing(L, spacing[j]));
  }
  plan.potential_cap = options.cap_factor * energy;
  plan.reliability_cutoff = reliability_cutoff_nd(alpha, plan.grid, options.safety, plan.potential_cap);
  return plan;
}

BoxPlan plan_box_dirichlet(const ExponentVector& alpha, double energy,
                           const std::vector<double>& spacing, const BoxOptions& options) {
  require(energy > 0.0, "box plan: energy must be positive");
  require(spacing.size() == alpha.size(), "box plan: one spacing per axis required");
  BoxPlan plan;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const double beta_axis = alpha[j] / alpha.smallest();
    const double e0 = unit_cross_section_energy(alpha, j);
    double L = std::pow(options.safety * energy / e0, beta_rest_sum(alpha, j) / (2.0 * beta_axis));
    L = std::max(L, options.min_half_width);
    plan.grid.axes.push_back(AxisGrid::with_spacing(L, spacing[j]));
  }
  plan.potential_cap = std::numeric_limits<double>::infinity();
  plan.reliability_cutoff = reliability_cutoff_dirichlet(alpha, plan.grid, options.safety);
  return plan;
}

namespace {

GridSpec coarsen(const GridSpec& fine, double ratio) {
  GridSpec out = fine;
  for (auto& a : out.axes) a = AxisGrid::with_spacing(a.half_width, a.spacing() * ratio);
  return out;
}

double mean_ratio(const GridSpec& coarse, const GridSpec& fine) {
  double log_sum = 0.0;
  for (std::size_t a = 0; a < fine.axes.size(); ++a) {
    log_sum += std::log(coarse.axes[a].spacing() / fine.axes[a].spacing());
  }
  return std::exp(log_sum / fine.axes.size());
}

Spectrum two_grid(const std::function<DiscreteOperator(const GridSpec&, const std::vector<Parity>&)>& build,
                  const BoxPlan& plan, const NdSpectrumOptions& options, const std::string& label) {
  const std::size_t n = plan.grid.dimension();
  const GridSpec coarse = coarsen(plan.grid, options.coarse_ratio);
  const Spectrum f = sector_eigenvalues_below(
      n, [&](const std::vector<Parity>& p) { return build(plan.grid, p); }, options.energy,
      options.eigen);
  const Spectrum c = sector_eigenvalues_below(
      n, [&](const std::vector<Parity>& p) { return build(coarse, p); }, 1.05 * options.energy,
      options.eigen);
  const double ratio = mean_ratio(coarse, plan.grid);
  Spectrum out;
  double cutoff = std::min(options.energy, plan.reliability_cutoff);
  if (c.size() < f.size()) {
    // Unmatched fine eigenvalues cannot be extrapolated; stop trusting there.
    cutoff = std::min(cutoff, f.eigenvalues[c.size()]);
  }
  if (options.richardson) {
    out = richardson_combine(c.eigenvalues, f.eigenvalues, ratio, options.order);
    double shift = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      shift = std::max(shift, std::abs(out.eigenvalues[i] - f.eigenvalues[i]));
    }
    cutoff = std::min(cutoff, options.energy - shift);
  } else {
    const std::size_t m = std::min(c.size(), f.size());
    out.eigenvalues.assign(f.eigenvalues.begin(), f.eigenvalues.begin() + m);
    out.convergence.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      out.convergence[i] = std::abs(f.eigenvalues[i] - c.eigenvalues[i]) / f.eigenvalues[i];
    }
  }
  // Drop whatever lies above the trusted range.
  std::size_t keep = 0;
  while (keep < out.size() && out.eigenvalues[keep] <= cutoff) ++keep;
  out.eigenvalues.resize(keep);
  out.convergence.resize(keep);
  out.reliability_cutoff = cutoff;
  out.label = label + " on " + plan.grid.to_string();
  return out;
}

}  // namespace

Spectrum spectrum_nd(const ExponentVector& alpha, const NdSpectrumOptions& options) {
  require(alpha.size() >= 2, "spectrum_nd: dimension must be at least 2");
  std::vector<double> spacing = options.spacing;
  if (spacing.empty()) spacing.assign(alpha.size(), 0.05);
  const BoxPlan plan = plan_box_nd(alpha, options.energy, spacing, options.box);
  auto build = [&](const GridSpec& grid, const std::vector<Parity>& parities) {
    NdOptions o;
    o.parities = parities;
    o.potential_cap = plan.potential_cap;
    return build_operator_nd(alpha, grid, o);
  };
  return two_grid(build, plan, options, "H alpha=(" + alpha.to_string() + ")");
}

Spectrum dirichlet_spectrum_nd(const ExponentVector& alpha, const NdSpectrumOptions& options) {
  require(alpha.size() >= 2, "dirichlet_spectrum_nd: dimension must be at least 2");
  std::vector<double> spacing = options.spacing;
  if (spacing.empty()) spacing.assign(alpha.size(), 0.02);
  const BoxPlan plan = plan_box_dirichlet(alpha, options.energy, spacing, options.box);
  auto build = [&](const GridSpec& grid, const std::vector<Parity>& parities) {
    return build_dirichlet_nd(alpha, grid, parities);
  };
  NdSpectrumOptions opts = options;
  opts.richardson = false;  // first-order staircase boundary
  return two_grid(build, plan, opts, "Dirichlet alpha=(" + alpha.to_string() + ")");
}

}  // namespace specasym
