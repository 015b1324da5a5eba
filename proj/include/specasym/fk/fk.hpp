#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specasym/core/exponent_vector.hpp"

namespace specasym {

// V(x) = g prod_i |x_i|^{alpha_i}; one entry gives the 1D potential g|x|^gamma.
struct FkPotential {
  std::vector<double> alpha;
  double g = 1.0;

  static FkPotential product(const ExponentVector& alpha);
  static FkPotential one_d(double gamma, double g = 1.0);

  std::size_t dimension() const { return alpha.size(); }
  double operator()(const double* x) const;
  std::string describe() const;
};

struct McParams {
  std::size_t paths = 100000;
  int steps = 128;
  std::uint64_t seed = 0x5eed;
  // Cauchy scale of the anchor density per axis; empty picks the scale at
  // which the classical or channel weight drops by e.
  std::vector<double> anchor_scale;
};

struct FkEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  double paths_kept = 1.0;
  double t = 0.0;
  std::size_t paths = 0;
  int steps = 0;
  std::uint64_t seed = 0;
  std::string convention;
  std::string mode = "none";
  double kappa = 1.0;
  // True when the estimate is a guaranteed lower bound (confined modes).
  bool rigorous = true;
};

// Anchor scales used when McParams::anchor_scale is empty.
std::vector<double> default_anchor_scale(const FkPotential& v, double t);

// Monte Carlo Z_Q(t): anchors x drawn from a product Cauchy density p(x)
// (no box truncation), one bridge per anchor, weight (4 pi t)^{-n/2}
// exp(-1/2 int V(x + b)) / p(x), time integral by the trapezoidal rule.
// Throws ConvergenceError when stderr exceeds 25% of the mean.
FkEstimate fk_trace(const FkPotential& v, double t, const McParams& params = {});

enum class ConfinementMode { None, XnBand, AllBand };
ConfinementMode parse_confinement_mode(const std::string& text);
std::string to_string(ConfinementMode mode);

struct ConfinementPolicy {
  ConfinementMode mode = ConfinementMode::XnBand;
  // Band for the x_n coordinate in XnBand mode.
  double band = 1.0;
  // Constant in kappa(t) = exp(c / |ln t|); non-positive selects c = n.
  double kappa_c = 0.0;
};

double kappa(double t, double c);

// Lower bounds on Z_Q(t) from confined paths.
//  XnBand: keep paths with sup |b_n| <= band and evaluate the x_n factor of
//   the potential at |x_n| + band.
//  AllBand (t < 1): keep paths with sup |b_i| <= sqrt(t)|ln t| for every i,
//   drop anchors with some |x_i| < a = sqrt(t)(ln t)^2, and bound the
//   potential along kept paths by kappa(t) V(x). Exact for c >= sum(alpha);
//   the flag `rigorous` records whether c meets that.
// Throws ConvergenceError when no path is kept.
FkEstimate fk_confined_lower(const ExponentVector& alpha, double t,
                             const ConfinementPolicy& policy, const McParams& params = {});

}  // namespace specasym
