#pragma once

#include <functional>
#include <vector>

#include "specasym/core/exponent_vector.hpp"
#include "specasym/core/spectrum.hpp"
#include "specasym/discretize/eigensolve.hpp"
#include "specasym/discretize/grid.hpp"

namespace specasym {

// Eigenvalues of some operator family discretized on the given grid.
using GridEigenvalues = std::function<std::vector<double>(const GridSpec&)>;

struct ConvergeOptions {
  double rel_tol = 1e-6;
  int max_refinements = 6;
  // Spacing ratio between successive levels.
  double ratio = 2.0;
  // Extrapolate from the last two levels assuming an error ~ h^order.
  bool richardson = true;
  double order = 2.0;
};

// Refines the grid until each of the k lowest eigenvalues changes by less
// than rel_tol (relative) between successive levels; with Richardson
// extrapolation the change is measured between successive extrapolants.
// Throws ConvergenceError when the refinement budget runs out.
Spectrum converge_spectrum(const GridEigenvalues& builder, const GridSpec& base, std::size_t k,
                           const ConvergeOptions& options = {});

// Extrapolation of matched eigenvalues computed with spacings h and
// h / ratio, assuming an error ~ h^order. Convergence estimates are the
// relative fine-coarse changes.
Spectrum richardson_combine(const std::vector<double>& coarse, const std::vector<double>& fine,
                            double ratio, double order = 2.0);

// Leading error order of the three-point scheme for -d^2/dx^2 + |x|^gamma:
// 2 for smooth enough potentials, 1 + gamma below gamma = 1 (cusp at 0).
double fd_error_order(double gamma);

// Half width for -d^2/dx^2 + g|x|^gamma that leaves room for the
// exponential decay beyond the turning point of the given energy.
double half_width_1d(double gamma, double g, double energy);
// WKB estimate of the k-th (0-based) eigenvalue of -d^2/dx^2 + g|x|^gamma.
double wkb_eigenvalue_1d(double gamma, double g, std::size_t k);

// k lowest eigenvalues of -d^2/dx^2 + g|x|^gamma, converged to rel_tol.
Spectrum converged_spectrum_1d(double gamma, double g, std::size_t k, double rel_tol = 1e-8,
                               int max_refinements = 6);
// Every eigenvalue <= energy, on a box sized for that energy, extrapolated
// from spacings h and h / 2.
Spectrum spectrum_1d_below(double gamma, double g, double energy, double h = 0.005);

// Lowest eigenvalue of -d^2/dx^2 + |x|^nu (memoized).
double ground_energy_1d(double nu);

// Lowest eigenvalue of -Delta + prod_{i != axis} |x_i|^{alpha_i}, the
// transverse operator of the channel along the given axis.
double transverse_ground_energy(const ExponentVector& alpha, std::size_t axis);
// Bottom of the continuum-like channel along an axis at |x_axis| = x: by
// the scaling relation it is |x|^{2 alpha_axis / (p + 2)} times the
// transverse ground energy, p the degree of the transverse potential.
double channel_threshold(const ExponentVector& alpha, std::size_t axis, double x);
// Same for the Dirichlet domain: the lowest Dirichlet eigenvalue of the
// cross-section of the domain at |x_axis| = x.
double dirichlet_channel_threshold(const ExponentVector& alpha, std::size_t axis, double x);

// Box plan for the potential problem or the Dirichlet problem.
struct BoxPlan {
  GridSpec grid;
  double potential_cap = 0.0;
  double reliability_cutoff = 0.0;
};

struct BoxOptions {
  // Channel threshold at the box edge divided by the trusted energy.
  double safety = 2.0;
  // Potential cap as a multiple of the target energy.
  double cap_factor = 10.0;
  double min_half_width = 3.0;
};

// Energy below which the box truncation is trusted: the smallest channel
// threshold at the box edges divided by the safety factor (and the cap
// divided by the cap factor).
double reliability_cutoff_nd(const ExponentVector& alpha, const GridSpec& grid, double safety,
                             double potential_cap);
double reliability_cutoff_dirichlet(const ExponentVector& alpha, const GridSpec& grid,
                                    double safety);

BoxPlan plan_box_nd(const ExponentVector& alpha, double energy, const std::vector<double>& spacing,
                    const BoxOptions& options = {});
BoxPlan plan_box_dirichlet(const ExponentVector& alpha, double energy,
                           const std::vector<double>& spacing, const BoxOptions& options = {});

struct NdSpectrumOptions {
  double energy = 10.0;
  std::vector<double> spacing;  // fine-grid spacing per axis
  BoxOptions box;
  // Second grid coarser by this factor for extrapolation and convergence
  // estimates.
  double coarse_ratio = 1.4142135623730951;
  bool richardson = true;
  double order = 2.0;
  EigenOptions eigen;
};

// All eigenvalues of H^alpha_n below the energy (over every parity sector),
// from a fine and a coarse grid. The reliability cutoff combines the
// channel heuristic and the energy reach.
Spectrum spectrum_nd(const ExponentVector& alpha, const NdSpectrumOptions& options);
// Same for the Dirichlet Laplacian on the hyperbolic-cross domain. Never
// extrapolated: the staircase boundary makes the error first order in h.
Spectrum dirichlet_spectrum_nd(const ExponentVector& alpha, const NdSpectrumOptions& options);

}  // namespace specasym
