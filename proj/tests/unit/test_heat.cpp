#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "specasym/core/errors.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/discretize/converge.hpp"
#include "specasym/heat/chain.hpp"
#include "specasym/heat/heat_trace.hpp"
#include "specasym/heat/slice.hpp"

using namespace specasym;
using special::pi;

namespace {

Spectrum harmonic(std::size_t count) {
  std::vector<double> e;
  for (std::size_t k = 0; k < count; ++k) e.push_back(2.0 * k + 1.0);
  return make_spectrum(e, "harmonic");
}

const SliceArtifacts& distinct_artifacts() {
  static const SliceArtifacts art = make_slice_artifacts({2.0, 1.0});
  return art;
}

}  // namespace

TEST_CASE("heat trace of the harmonic oscillator") {
  const Spectrum s = harmonic(200);
  for (double t : {0.5, 1.0, 2.0}) {
    const TraceValue v = heat_trace(s, t, {TailMode::None});
    CHECK(v.value == doctest::Approx(1.0 / (2.0 * std::sinh(t))).epsilon(1e-12));
    CHECK(v.tail == 0.0);
  }
}

TEST_CASE("power-law tail closes a truncated spectrum") {
  Spectrum s = harmonic(40);
  s.reliability_cutoff = 79.0;
  const double t = 0.05;
  const TraceValue v = heat_trace(s, t);
  const double exact = 1.0 / (2.0 * std::sinh(t));
  CHECK(v.tail > 0.0);
  CHECK(std::abs(v.value - exact) <= v.error);
  CHECK(v.value == doctest::Approx(exact).epsilon(2e-3));
  const TraceValue geometric = heat_trace(s, t, {TailMode::GeometricGap});
  CHECK(std::abs(geometric.value - exact) <= geometric.error + 1e-12);
  CHECK_THROWS_AS(heat_trace(s, 0.005), UntrustedRangeError);
}

TEST_CASE("power-law Laplace tail against quadrature") {
  const double nc = 50.0, ec = 20.0, l = 1.5, t = 0.1;
  const auto f = [&](double e) {
    return e < ec ? 0.0 : std::exp(-t * e) * nc * l * std::pow(e / ec, l - 1.0) / ec;
  };
  boost::math::quadrature::exp_sinh<double> q;
  const double ref = q.integrate([&](double u) { return f(ec + u); });
  CHECK(power_law_laplace_tail(nc, ec, l, t) == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("growth exponent of the harmonic counting function") {
  CHECK(fitted_growth_exponent(harmonic(200)) == doctest::Approx(1.0).epsilon(0.02));
  CHECK_THROWS_AS(fitted_growth_exponent(harmonic(4)), ValidationError);
}

TEST_CASE("classical 1D trace") {
  // Harmonic: pi^{-1/2} Gamma(3/2) t^{-1} = 1/(2t).
  CHECK(z_classical_1d(2.0, 0.3) == doctest::Approx(1.0 / 0.6).epsilon(1e-14));
  for (double gamma : {0.5, 1.0, 3.0}) {
    const double t = 0.4;
    boost::math::quadrature::exp_sinh<double> q;
    const double x_int = 2.0 * q.integrate([&](double x) { return std::exp(-t * std::pow(x, gamma)); });
    const double ref = x_int / std::sqrt(4.0 * pi * t);
    CHECK(z_classical_1d(gamma, t) == doctest::Approx(ref).epsilon(1e-10));
  }
  // Golden-Thompson: the quantum trace lies below the classical one.
  const Spectrum s = spectrum_1d_below(1.0, 1.0, 40.0, 0.01);
  for (double t : {0.5, 1.0}) CHECK(heat_trace(s, t).value < z_classical_1d(1.0, t));
}

TEST_CASE("trace table interpolates and continues below the trusted range") {
  const Spectrum s = harmonic(30);
  const TraceTable table(s, TraceTable::Asymptote{0.5, 1.0});
  for (double t : {0.3, 0.7, 1.3, 4.0}) {
    const TraceValue v = table(t);
    CHECK(v.value == doctest::Approx(1.0 / (2.0 * std::sinh(t))).epsilon(1e-4));
  }
  const double t = 0.5 * table.min_trusted();
  const TraceValue below = table(t);
  CHECK(std::abs(below.value - 1.0 / (2.0 * std::sinh(t))) <= below.error + 1e-3 * below.value);
  const TraceTable bare(s);
  CHECK_THROWS_AS(bare(0.01), UntrustedRangeError);
  CHECK(table.ground_energy() == 1.0);
}

TEST_CASE("one-dimensional table of F for the harmonic potential") {
  const TraceTable f = one_d_trace_table(2.0, 30.0, 0.02);
  for (double t : {0.05, 0.2, 1.0}) {
    CHECK(f(t).value == doctest::Approx(1.0 / (2.0 * std::sinh(t))).epsilon(5e-3));
  }
}

TEST_CASE("sliced Golden-Thompson equals its closed form") {
  const SliceArtifacts& art = distinct_artifacts();
  CHECK(art.d_n == doctest::Approx(2.0));
  CHECK(art.b_n == doctest::Approx(0.8));
  for (double t : {0.2, 0.5, 1.0}) {
    const SgtResult sgt = z_sliced_gt(art, t);
    REQUIRE(!sgt.divergent);
    const double closed = z_sliced_gt_closed_form(2.0, pi * pi / 8.0, t);
    CHECK(std::abs(sgt.value.value - closed) <= sgt.value.error + 1e-3 * closed);
  }
  // Frozen: (pi)^{-1/2} Gamma(3) pi^2/8 at t = 1.
  CHECK(z_sliced_gt_closed_form(2.0, pi * pi / 8.0, 1.0) == doctest::Approx(1.3920819).epsilon(1e-7));
}

TEST_CASE("sliced bread lies below sliced Golden-Thompson") {
  const SliceArtifacts& art = distinct_artifacts();
  for (double t : {0.5, 1.0}) {
    const TraceValue sb = z_sliced_bread(art, t);
    const SgtResult sgt = z_sliced_gt(art, t);
    CHECK(sb.value - sgt.value.value <= sb.error + sgt.value.error);
  }
}

TEST_CASE("slice function scales with the exponent d_n") {
  const SliceArtifacts& art = distinct_artifacts();
  const double t = 0.7;
  const double x = 3.0;
  const TraceValue direct = slice_function(art, x, t);
  const TraceValue unit = slice_function(art, 1.0, t * std::pow(x, 1.0 / art.d_n));
  CHECK(direct.value == doctest::Approx(unit.value).epsilon(1e-12));
  // Near-origin mass t^{d_n} int_0^1 F decreases toward 0.
  const double m1 = near_origin_slice_mass(art, 0.5).value;
  const double m2 = near_origin_slice_mass(art, 0.2).value;
  CHECK(m2 < m1);
}

TEST_CASE("divergence certificates") {
  const SgtResult equal = sliced_gt_divergence({1.0, 1.0});
  CHECK(equal.divergent);
  CHECK(!equal.certificate.empty());
  CHECK(!sliced_gt_divergence({2.0, 1.0}).divergent);
  const DivergenceCertificate c = z_classical_product_divergence({2.0, 1.0});
  CHECK(c.divergent);
  REQUIRE(c.exponents.size() == 1);
  CHECK(c.exponents[0] == doctest::Approx(-2.0));
  CHECK(z_classical_product_divergence({1.0, 1.0}).exponents[0] == doctest::Approx(-1.0));
  CHECK_THROWS_AS(z_classical_product_divergence({2.0}), ValidationError);
}

TEST_CASE("separable product bound dominates the sliced bound") {
  const auto factors = separable_factors({2.0, 1.0});
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].eta == doctest::Approx(4.0 / 3.0));
  CHECK(factors[1].eta == doctest::Approx(0.5));
  CHECK(factors[1].coupling == doctest::Approx(1.0).epsilon(1e-7));
  const SeparableBound bound({2.0, 1.0});
  const TraceValue sb = z_sliced_bread(distinct_artifacts(), 1.0);
  CHECK(bound(1.0).value > sb.value);
}

TEST_CASE("chain violations are detected on synthetic entries") {
  ChainReport r;
  r.entries.push_back({TraceSource::SpectrumSum, false, {2.0, 0.1, 2.0, 0.0}, ""});
  r.entries.push_back({TraceSource::SlicedBread, false, {1.5, 0.1, 1.5, 0.0}, ""});
  r.entries.push_back({TraceSource::Classical, true, {}, "divergent"});
  find_violations(r);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].lower == TraceSource::SpectrumSum);
  CHECK(r.violations[0].excess == doctest::Approx(0.3));
  ChainReport ok;
  ok.entries.push_back({TraceSource::SpectrumSum, false, {1.55, 0.1, 1.55, 0.0}, ""});
  ok.entries.push_back({TraceSource::SlicedBread, false, {1.5, 0.1, 1.5, 0.0}, ""});
  find_violations(ok);
  CHECK(ok.ok());
}

TEST_CASE("1D chain: quantum below classical") {
  const Spectrum s = spectrum_1d_below(1.0, 1.0, 40.0, 0.01);
  for (double t : {0.5, 1.0}) CHECK(check_chain_1d(s, 1.0, t).ok());
}

TEST_CASE("heat trace curve CSV") {
  HeatTraceCurve c{TraceSource::SlicedBread, {}, {}, {}};
  c.add(0.5, 1.0, 0.1);
  std::ostringstream out;
  c.write_csv(out);
  CHECK(out.str().rfind("t,value,error,source\n", 0) == 0);
  CHECK(out.str().find("sliced-bread") != std::string::npos);
  CHECK_THROWS_AS(parse_tail_mode("bogus"), ValidationError);
}
