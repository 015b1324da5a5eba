#include "specasym/core/theorems.hpp"

#include <cmath>

#include "specasym/core/errors.hpp"
#include "specasym/core/special_functions.hpp"

namespace specasym {

using special::pi;

double AsymptoticLaw::evaluate(double x) const {
  require(x > 0.0, "asymptotic law: argument must be positive");
  if (regime == Regime::HeatTrace) {
    return constant * std::pow(x, -power) * std::pow(std::abs(std::log(x)), log_power);
  }
  return constant * std::pow(x, power) * std::pow(std::log(x), log_power);
}

std::string to_string(Regime regime) {
  return regime == Regime::HeatTrace ? "heat-trace-small-t" : "counting-large-E";
}

TheoremId parse_theorem_id(const std::string& text) {
  if (text == "T1") return TheoremId::T1;
  if (text == "T2") return TheoremId::T2;
  if (text == "T3") return TheoremId::T3;
  if (text == "T4") return TheoremId::T4;
  if (text == "T5") return TheoremId::T5;
  if (text == "T6") return TheoremId::T6;
  if (text == "T7") return TheoremId::T7;
  if (text == "Simon2D-power") return TheoremId::Simon2DPower;
  if (text == "Simon2D-log") return TheoremId::Simon2DLog;
  throw ValidationError("unknown theorem id '" + text + "'");
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::T7: return "T7";
    case TheoremId::Simon2DPower: return "Simon2D-power";
    case TheoremId::Simon2DLog: return "Simon2D-log";
  }
  return "?";
}

double dim_exponent(const ExponentVector& alpha) {
  require(alpha.size() >= 2, "dim_exponent: dimension must be at least 2");
  return (alpha.sum() - alpha.smallest() + 2.0) / (2.0 * alpha.smallest());
}

double q_exponent(const ExponentVector& alpha) {
  require(alpha.size() >= 2, "q_exponent: dimension must be at least 2");
  return (alpha.sum() - alpha.smallest()) / (2.0 * alpha.smallest());
}

ScalingExponents lemma_exponents(double gamma, int n, double alpha0) {
  require(std::isfinite(gamma) && gamma > 0.0, "lemma_exponents: gamma must be positive");
  require(n >= 1, "lemma_exponents: n must be at least 1");
  require(std::isfinite(alpha0) && alpha0 > 0.0, "lemma_exponents: alpha0 must be positive");
  ScalingExponents e;
  e.tau = 2.0 / (gamma + 2.0);
  e.eta = ((n - 1) * alpha0 + 2.0) / 2.0;
  e.mu = (gamma + 2.0) / (2.0 * gamma);
  e.d_n = (n - 1) / 2.0 + 1.0 / alpha0;
  e.b_n = e.d_n / (e.d_n + 0.5);
  e.q = (n - 1) / 2.0;
  return e;
}

namespace {

void require_strict(const ExponentVector& alpha, TheoremId id) {
  require(alpha.size() >= 2, to_string(id) + ": dimension must be at least 2");
  const std::size_t n = alpha.size();
  require(alpha[n - 2] - alpha[n - 1] > 1e-12 * alpha[n - 2],
          to_string(id) + ": requires alpha_{n-1} > alpha_n (got equal exponents)");
}

double require_zeta(std::optional<double> zeta_value, TheoremId id) {
  require(zeta_value.has_value(), to_string(id) + ": spectral zeta value required");
  require(std::isfinite(*zeta_value) && *zeta_value > 0.0,
          to_string(id) + ": spectral zeta value must be positive and finite");
  return *zeta_value;
}

// Common shape of T1/T3/T5: zeta * Gamma(s + 1) / pi^{n/2 or 1/2} / extra.
TheoremLaw zeta_law(double power, double zeta, double s, double extra, std::size_t n,
                    Regime regime) {
  const double base = zeta * special::gamma(s + 1.0) / extra;
  TheoremLaw out;
  out.prefactors = PrefactorPair{base / std::pow(pi, n / 2.0), base / std::sqrt(pi)};
  out.law = {power, 0, out.prefactors->pi_n_half, regime};
  return out;
}

}  // namespace

TheoremLaw theorem_constant(TheoremId id, const ExponentVector& alpha,
                            std::optional<double> zeta_value) {
  const std::size_t n = alpha.size();
  TheoremLaw out;
  switch (id) {
    case TheoremId::T1:
    case TheoremId::T3: {
      require_strict(alpha, id);
      const double zeta = require_zeta(zeta_value, id);
      const double dn = dim_exponent(alpha);
      const bool counting = id == TheoremId::T3;
      return zeta_law(dn + 0.5, zeta, dn, counting ? special::gamma(dn + 1.5) : 1.0, n,
                      counting ? Regime::Counting : Regime::HeatTrace);
    }
    case TheoremId::T5:
    case TheoremId::T6: {
      require_strict(alpha, id);
      const double zeta = require_zeta(zeta_value, id);
      const double q = q_exponent(alpha);
      return zeta_law(q + 0.5, zeta, q, special::gamma(q + 1.5), n, Regime::Counting);
    }
    case TheoremId::T2:
    case TheoremId::T4: {
      require(n >= 2, to_string(id) + ": dimension must be at least 2");
      require(alpha.all_equal(), to_string(id) + ": requires equal exponents");
      const double a0 = alpha[0];
      const double l = n / 2.0 + 1.0 / a0;
      double c = special::gamma(1.0 + 1.0 / a0) * std::pow(l, static_cast<double>(n - 1)) /
                 (std::pow(pi, n / 2.0) * special::factorial(static_cast<unsigned>(n - 1)));
      Regime regime = Regime::HeatTrace;
      if (id == TheoremId::T4) {
        c /= special::gamma(l + 1.0);
        regime = Regime::Counting;
      }
      out.law = {l, static_cast<int>(n - 1), c, regime};
      return out;
    }
    case TheoremId::T7: {
      require(n >= 2, "T7: dimension must be at least 2");
      const double nn = static_cast<double>(n);
      const double c = std::pow(nn, nn - 1.0) /
                       (special::gamma(nn / 2.0) * std::pow(pi, nn / 2.0) *
                        std::pow(2.0, nn - 1.0) * special::factorial(static_cast<unsigned>(n - 1)));
      out.law = {nn / 2.0, static_cast<int>(n - 1), c, Regime::Counting};
      return out;
    }
    case TheoremId::Simon2DPower: {
      require(n == 1 || n == 2, "Simon2D-power: expects one exponent or a 2D vector");
      double a = n == 1 ? alpha[0] : alpha[0] / alpha[1];
      require(std::abs(a - 1.0) > 1e-12, "Simon2D-power: exponent 1 is the logarithmic case");
      if (a < 1.0) a = 1.0 / a;
      const double c = special::riemann_zeta(a) * std::pow(pi / 2.0, -a) *
                       special::gamma(a / 2.0 + 1.0) /
                       (std::sqrt(pi) * special::gamma(a / 2.0 + 1.5));
      out.law = {(a + 1.0) / 2.0, 0, c, Regime::Counting};
      return out;
    }
    case TheoremId::Simon2DLog:
      out.law = {1.0, 1, 1.0 / pi, Regime::Counting};
      return out;
  }
  throw ValidationError("theorem_constant: unhandled theorem id");
}

}  // namespace specasym
