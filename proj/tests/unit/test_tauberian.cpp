#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "specasym/core/errors.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/discretize/converge.hpp"
#include "specasym/tauberian/tauberian.hpp"

using namespace specasym;
using special::pi;

namespace {

Spectrum harmonic(std::size_t count) {
  std::vector<double> e;
  for (std::size_t k = 0; k < count; ++k) e.push_back(2.0 * k + 1.0);
  Spectrum s = make_spectrum(e, "harmonic");
  s.reliability_cutoff = e.back();
  return s;
}

}  // namespace

TEST_CASE("karamata conversion") {
  const AsymptoticLaw heat{2.5, 0, 1.392, Regime::HeatTrace};
  const AsymptoticLaw counting = karamata_convert(heat);
  CHECK(counting.regime == Regime::Counting);
  CHECK(counting.constant == doctest::Approx(1.392 / boost::math::tgamma(3.5)).epsilon(1e-14));
  const AsymptoticLaw back = karamata_convert(counting);
  CHECK(back.constant == doctest::Approx(heat.constant).epsilon(1e-15));
  CHECK(back.regime == Regime::HeatTrace);
  CHECK_THROWS_AS(karamata_convert(AsymptoticLaw{0.0, 0, 1.0, Regime::Counting}), ValidationError);
}

TEST_CASE("laplace-stieltjes transform of E^2") {
  CountingSamples s;
  for (int i = 0; i < 20000; ++i) {
    const double e = 1e-3 * std::pow(1e7, i / 19999.0);
    s.energy.push_back(e);
    s.count.push_back(e * e);
  }
  for (double t : {1e-3, 1e-2, 1e-1}) {
    const LaplaceValue v = laplace_stieltjes(s, t, StieltjesRule::Midpoint);
    CHECK(v.value + v.remainder == doctest::Approx(2.0 / (t * t)).epsilon(1e-3));
  }
  CountingSamples short_range;
  for (int i = 1; i <= 100; ++i) {
    short_range.energy.push_back(i);
    short_range.count.push_back(double(i) * i);
  }
  CHECK_THROWS_AS(laplace_stieltjes(short_range, 1e-3), UntrustedRangeError);
  CHECK(laplace_stieltjes(CountingSamples{}, 1.0).value == 0.0);
}

TEST_CASE("laplace-stieltjes of a spectrum is its heat trace") {
  const Spectrum s = harmonic(200);
  const CountingSamples c = CountingSamples::from_spectrum(s);
  CHECK(laplace_stieltjes(c, 0.5).value == doctest::Approx(1.0 / (2.0 * std::sinh(0.5))).epsilon(1e-12));
}

TEST_CASE("fit recovers synthetic laws") {
  FitData d;
  d.regime = Regime::Counting;
  for (int i = 0; i < 400; ++i) {
    const double e = 10.0 * std::pow(100.0, i / 399.0);
    d.x.push_back(e);
    d.y.push_back(0.3 * std::pow(e, 1.5) * std::log(e));
  }
  d.reliable_limit = 1000.0;
  const FitResult r = fit_asymptotic(d, {0, 1});
  CHECK(r.law.log_power == 1);
  CHECK(r.law.power == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(r.law.constant == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(r.model(1).residual < r.model(0).residual);
  const ModelFit c = fit_constant(d, 1.5, 1, {100.0, 1000.0});
  CHECK(c.constant == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS(fit_asymptotic(d, {0}, FitWindow{100.0, 101.0}), ValidationError);
  CHECK_THROWS_AS(fit_asymptotic(d, {0}, FitWindow{100.0, 2000.0}), ValidationError);
}

TEST_CASE("heat-trace fit in 1/t") {
  FitData d;
  d.regime = Regime::HeatTrace;
  for (int i = 0; i < 50; ++i) {
    const double t = 0.01 * std::pow(10.0, i / 49.0);
    d.x.push_back(t);
    d.y.push_back(1.4 * std::pow(t, -2.5));
  }
  const ModelFit m = fit_constant(d, 2.5, 0, {0.01, 0.1});
  CHECK(m.constant == doctest::Approx(1.4).epsilon(1e-12));
  const FitResult r = fit_asymptotic(d, {0}, FitWindow{0.01, 0.1});
  CHECK(r.law.power == doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("harmonic counting function has power 1") {
  const FitResult r = fit_asymptotic(FitData::counting(harmonic(500)), {0});
  CHECK(r.law.power == doctest::Approx(1.0).epsilon(0.01));
  CHECK(r.law.constant == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("spectral zeta of the oscillator") {
  const Spectrum s = harmonic(2000);
  const ZetaValue z = spectral_zeta(s, 2.0);
  CHECK(std::abs(z.total - pi * pi / 8.0) <= z.error);
  CHECK(z.total == doctest::Approx(pi * pi / 8.0).epsilon(1e-5));
  const ZetaValue none = spectral_zeta(s, 2.0, ZetaTail::None);
  CHECK(none.tail_estimate == 0.0);
  CHECK(none.total < z.total);
  CHECK_THROWS_AS(spectral_zeta(s, 0.9), ValidationError);
  CHECK(to_string(parse_zeta_tail("weyl-power-log")) == "weyl-power-log");
}

TEST_CASE("spectral zeta of the Airy operator") {
  const Spectrum s = spectrum_1d_below(1.0, 1.0, 60.0, 0.01);
  const ZetaValue z = spectral_zeta(s, 2.0);
  // Frozen reference from this solver.
  CHECK(z.total == doctest::Approx(1.903).epsilon(0.01));
  CHECK(z.growth_power == doctest::Approx(1.5).epsilon(0.05));
}
