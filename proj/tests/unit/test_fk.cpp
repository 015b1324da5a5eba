#include <doctest.h>

#include <cmath>

#include "specasym/core/errors.hpp"
#include "specasym/fk/bridges.hpp"
#include "specasym/fk/fk.hpp"
#include "specasym/fk/log_volume.hpp"
#include "specasym/fk/philox.hpp"

using namespace specasym;

TEST_CASE("philox known-answer vectors") {
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) ==
        PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("philox streams are reproducible and well distributed") {
  PhiloxStream a(42, 1, 7);
  PhiloxStream b(42, 1, 7);
  PhiloxStream c(42, 1, 8);
  double sum = 0.0, sum2 = 0.0;
  bool differs = false;
  constexpr int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = a.uniform();
    CHECK_FALSE((u <= 0.0 || u >= 1.0));
    CHECK(u == b.uniform());
    differs = differs || u != c.uniform();
    sum += u;
    sum2 += u * u;
  }
  CHECK(differs);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(sum2 / n - (sum / n) * (sum / n) == doctest::Approx(1.0 / 12.0).epsilon(0.01));
  PhiloxStream g(3, 2, 0);
  double m = 0.0, v = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = g.normal();
    m += z;
    v += z * z;
  }
  CHECK(std::abs(m / n) < 0.01);
  CHECK(v / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("bridge endpoints are pinned and the midpoint variance is t/2") {
  const double t = 0.8;
  const PathEnsemble e = sample_bridges({0.3, -0.2}, t, 64, 20000, 11);
  CHECK(e.horizon == doctest::Approx(2.0 * t));
  double var = 0.0;
  for (std::size_t p = 0; p < e.count; ++p) {
    CHECK(e.at(p, 0, 0) == doctest::Approx(0.3));
    CHECK(e.at(p, 64, 1) == doctest::Approx(-0.2));
    const double d = e.at(p, 32, 0) - 0.3;
    var += d * d;
  }
  var /= static_cast<double>(e.count);
  CHECK(var == doctest::Approx(t / 2.0).epsilon(0.03));
  CHECK_THROWS_AS(sample_bridges({0.0}, t, 8, 10, 1), ValidationError);
}

TEST_CASE("exit probability stays below its bounds") {
  for (double t : {0.05, 0.1}) {
    const ExitProbability p = exit_probability(t, 1.0, 20000, 5);
    CHECK(p.empirical <= p.bound);
    CHECK(p.reflection_bound <= p.bound);
  }
  const ExitProbability wide = exit_probability(1.0, 0.5, 20000, 5);
  CHECK(wide.empirical > 0.5);
}

TEST_CASE("Feynman-Kac trace of the harmonic oscillator") {
  McParams p;
  p.paths = 20000;
  p.steps = 64;
  for (double t : {0.5, 1.0}) {
    const FkEstimate e = fk_trace(FkPotential::one_d(2.0), t, p);
    CHECK(std::abs(e.mean - 1.0 / (2.0 * std::sinh(t))) <= 4.0 * e.stderr_);
    CHECK(e.convention == kBridgeConvention);
  }
}

TEST_CASE("Feynman-Kac estimates are deterministic in the seed") {
  McParams p;
  p.paths = 2000;
  p.steps = 32;
  const FkEstimate a = fk_trace(FkPotential::product({2.0, 1.0}), 0.5, p);
  const FkEstimate b = fk_trace(FkPotential::product({2.0, 1.0}), 0.5, p);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_ == b.stderr_);
  p.seed = 99;
  CHECK(fk_trace(FkPotential::product({2.0, 1.0}), 0.5, p).mean != a.mean);
}

TEST_CASE("confined estimates bound the trace from below") {
  McParams p;
  p.paths = 20000;
  p.steps = 64;
  const double t = 0.5;
  const FkEstimate full = fk_trace(FkPotential::product({2.0, 1.0}), t, p);
  ConfinementPolicy band;
  const FkEstimate xn = fk_confined_lower({2.0, 1.0}, t, band, p);
  CHECK(xn.mean <= full.mean + 3.0 * full.stderr_);
  CHECK(xn.paths_kept < 1.0);
  CHECK(xn.mode == "xn-band");
  ConfinementPolicy all;
  all.mode = ConfinementMode::AllBand;
  const FkEstimate ab = fk_confined_lower({2.0, 1.0}, 0.2, all, p);
  CHECK(ab.kappa == doctest::Approx(kappa(0.2, 2.0)));
  CHECK_FALSE(ab.rigorous);
  all.kappa_c = 3.0;
  CHECK(fk_confined_lower({2.0, 1.0}, 0.2, all, p).rigorous);
  CHECK(kappa(0.01, 2.0) == doctest::Approx(std::exp(2.0 / std::log(100.0))));
  CHECK_THROWS_AS(parse_confinement_mode("box"), ValidationError);
}

TEST_CASE("log-volume identity in two and three dimensions") {
  const RealFunction f = [](double p) { return std::exp(-p); };
  for (double a : {0.5, 1.0, 1.5}) {
    const double rhs = log_volume_rhs(f, a, 2);
    const LogVolumeValue lhs = log_volume_lhs(f, a, 2, LogVolumeMethod::Quadrature);
    CHECK(lhs.value == doctest::Approx(rhs).epsilon(1e-8));
  }
  // Frozen value for n = 2, a = 1.
  CHECK(log_volume_rhs(f, 1.0, 2) == doctest::Approx(0.8775357376).epsilon(1e-9));
  const double rhs3 = log_volume_rhs(f, 1.0, 3);
  CHECK(log_volume_lhs(f, 1.0, 3, LogVolumeMethod::Quadrature).value ==
        doctest::Approx(rhs3).epsilon(1e-7));
  const LogVolumeValue mc = log_volume_lhs(f, 1.0, 3, LogVolumeMethod::MonteCarlo, 200000, 7);
  CHECK(std::abs(mc.value - rhs3) <= 4.0 * mc.error);
  // n = 1: 2 int_a^inf f.
  CHECK(log_volume_rhs(f, 1.0, 1) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-10));
}
