#pragma once

#include <optional>
#include <string>

#include "specasym/core/exponent_vector.hpp"

namespace specasym {

enum class Regime { HeatTrace, Counting };

// c * t^{-l} |log t|^d (heat trace, t -> 0) or c * E^l (log E)^d (counting,
// E -> infinity).
struct AsymptoticLaw {
  double power = 0.0;
  int log_power = 0;
  double constant = 0.0;
  Regime regime = Regime::Counting;

  double evaluate(double x) const;
};

std::string to_string(Regime regime);

enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, Simon2DPower, Simon2DLog };

TheoremId parse_theorem_id(const std::string& text);
std::string to_string(TheoremId id);

// The zeta-dependent constants come with two prefactors, pi^{-n/2} and
// pi^{-1/2}. For n = 2 they differ by sqrt(pi); both are kept so the choice
// can be settled against computed traces.
struct PrefactorPair {
  double pi_n_half = 0.0;
  double pi_one_half = 0.0;
};

struct TheoremLaw {
  AsymptoticLaw law;  // constant uses pi^{-n/2} where a pair exists
  std::optional<PrefactorPair> prefactors;
};

// (alpha_1 + ... + alpha_{n-1} + 2) / (2 alpha_n), n >= 2.
double dim_exponent(const ExponentVector& alpha);
// (alpha_1 + ... + alpha_{n-1}) / (2 alpha_n), n >= 2.
double q_exponent(const ExponentVector& alpha);

struct ScalingExponents {
  double tau = 0.0;  // 2 / (gamma + 2)
  double eta = 0.0;  // ((n - 1) alpha0 + 2) / 2
  double mu = 0.0;   // (gamma + 2) / (2 gamma)
  double d_n = 0.0;  // (n - 1) / 2 + 1 / alpha0
  double b_n = 0.0;  // d_n / (d_n + 1/2)
  double q = 0.0;    // (n - 1) / 2
};

ScalingExponents lemma_exponents(double gamma, int n, double alpha0);

// Closed-form laws. T1, T3, T5 (and its alias T6) need the spectral zeta
// value of the (n-1)-dimensional base operator. Simon2DPower takes the single
// domain exponent either as a one-entry vector or as the ratio alpha_1/alpha_2
// of a two-entry vector.
TheoremLaw theorem_constant(TheoremId id, const ExponentVector& alpha,
                            std::optional<double> zeta_value = std::nullopt);

}  // namespace specasym
