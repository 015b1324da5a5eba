#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "specasym/core/errors.hpp"
#include "specasym/core/exponent_vector.hpp"
#include "specasym/core/quadrature.hpp"
#include "specasym/core/scaling.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/core/spectrum.hpp"
#include "specasym/core/theorems.hpp"

using namespace specasym;
using special::pi;

TEST_CASE("exponent vector sorts descending and keeps the permutation") {
  const ExponentVector a{1.0, 3.0, 2.0};
  CHECK(a[0] == 3.0);
  CHECK(a[1] == 2.0);
  CHECK(a[2] == 1.0);
  CHECK(a.permutation() == std::vector<std::size_t>{1, 2, 0});
  CHECK(a.smallest() == 1.0);
  CHECK(a.sum() == doctest::Approx(6.0));
  CHECK(ExponentVector::parse("2,1").values() == std::vector<double>{2.0, 1.0});
  CHECK(ExponentVector::parse("1 2").values() == std::vector<double>{2.0, 1.0});
  CHECK(ExponentVector::equal(3, 1.5).all_equal());
  CHECK(a.leading().values() == std::vector<double>{3.0, 2.0});
  CHECK(a.scaled(2.0).values() == std::vector<double>{6.0, 4.0, 2.0});
}

TEST_CASE("exponent vector rejects bad input") {
  CHECK_THROWS_AS(ExponentVector::parse(""), ValidationError);
  CHECK_THROWS_AS(ExponentVector::parse("2,-1"), ValidationError);
  CHECK_THROWS_AS(ExponentVector::parse("2,x"), ValidationError);
}

TEST_CASE("gamma and zeta against Boost") {
  for (double x : {0.1, 0.5, 1.0, 1.5, 2.5, 3.7, 7.25, 12.0, 30.5}) {
    CHECK(special::gamma(x) == doctest::Approx(boost::math::tgamma(x)).epsilon(1e-13));
    CHECK(special::log_gamma(x) == doctest::Approx(boost::math::lgamma(x)).epsilon(1e-13));
  }
  for (double s : {1.1, 1.5, 2.0, 2.5, 3.0, 6.0}) {
    CHECK(special::riemann_zeta(s) == doctest::Approx(boost::math::zeta(s)).epsilon(1e-13));
  }
  for (double a : {0.5, 1.5, 2.5, 4.0}) {
    for (double x : {0.1, 1.0, 3.0, 10.0, 40.0}) {
      CHECK(special::gamma_q(a, x) == doctest::Approx(boost::math::gamma_q(a, x)).epsilon(1e-12));
      CHECK(special::upper_gamma(a, x) ==
            doctest::Approx(boost::math::tgamma(a, x)).epsilon(1e-12));
    }
  }
  // Hurwitz zeta at a = 1/2: (2^s - 1) zeta(s).
  CHECK(special::hurwitz_zeta(2.0, 0.5) == doctest::Approx(3.0 * pi * pi / 6.0).epsilon(1e-13));
}

TEST_CASE("adaptive quadrature against closed forms and Boost") {
  const auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
  CHECK(integrate_or_throw(f, 0.0, 2.0) ==
        doctest::Approx(boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, 2.0))
            .epsilon(1e-11));
  CHECK(integrate_to_infinity_or_throw([](double x) { return std::exp(-x * x); }, 0.0) ==
        doctest::Approx(std::sqrt(pi) / 2.0).epsilon(1e-10));
  CHECK(integrate_or_throw([](double x) { return std::sqrt(x); }, 0.0, 1.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  const auto r = integrate([](double x) { return x * x; }, 1.0, 0.0);
  CHECK(r.value == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("dimension exponents") {
  CHECK(dim_exponent({2.0, 1.0}) == doctest::Approx(2.0));
  CHECK(dim_exponent({1.0, 1.0}) == doctest::Approx(1.5));
  CHECK(dim_exponent({3.0, 2.0, 1.0}) == doctest::Approx(3.5));
  CHECK(q_exponent({2.0, 1.0}) == doctest::Approx(1.0));
  const ScalingExponents e = lemma_exponents(1.0, 2, 1.0);
  CHECK(e.tau == doctest::Approx(2.0 / 3.0));
  CHECK(e.mu == doctest::Approx(1.5));
  CHECK(e.d_n == doctest::Approx(1.5));
  CHECK(e.b_n == doctest::Approx(0.75));
}

TEST_CASE("closed-form constants") {
  CHECK(theorem_constant(TheoremId::T7, ExponentVector::equal(2, 1.0)).law.constant ==
        doctest::Approx(1.0 / pi).epsilon(1e-15));
  const TheoremLaw t4 = theorem_constant(TheoremId::T4, ExponentVector::equal(2, 1.0));
  CHECK(t4.law.constant == doctest::Approx(1.0 / pi).epsilon(1e-15));
  CHECK(t4.law.power == 2.0);
  CHECK(t4.law.log_power == 1);
  CHECK(theorem_constant(TheoremId::Simon2DPower, ExponentVector{2.0}).law.constant ==
        doctest::Approx(8.0 / (9.0 * pi)).epsilon(1e-13));
  // Simon2D-power from a 2D vector uses the exponent ratio.
  CHECK(theorem_constant(TheoremId::Simon2DPower, ExponentVector{4.0, 2.0}).law.constant ==
        doctest::Approx(8.0 / (9.0 * pi)).epsilon(1e-13));
  // T2 heat constant equals T4 times Gamma(l + 1).
  for (double a0 : {0.5, 1.0, 2.0}) {
    for (std::size_t n : {2u, 3u}) {
      const auto h = theorem_constant(TheoremId::T2, ExponentVector::equal(n, a0)).law;
      const auto c = theorem_constant(TheoremId::T4, ExponentVector::equal(n, a0)).law;
      CHECK(h.constant == doctest::Approx(c.constant * special::gamma(h.power + 1.0)));
    }
  }
  // T1 prefactor pair differs by pi^{(n-1)/2}.
  const TheoremLaw t1 = theorem_constant(TheoremId::T1, ExponentVector{2.0, 1.0}, pi * pi / 8.0);
  REQUIRE(t1.prefactors);
  CHECK(t1.prefactors->pi_one_half / t1.prefactors->pi_n_half == doctest::Approx(std::sqrt(pi)));
  CHECK(t1.prefactors->pi_one_half == doctest::Approx(2.0 * pi * pi / 8.0 / std::sqrt(pi)));
  CHECK(t1.law.power == doctest::Approx(2.5));
  CHECK(theorem_constant(TheoremId::T6, ExponentVector{2.0, 1.0}, 1.0).law.constant ==
        theorem_constant(TheoremId::T5, ExponentVector{2.0, 1.0}, 1.0).law.constant);
}

TEST_CASE("theorem preconditions") {
  CHECK_THROWS_AS(theorem_constant(TheoremId::T1, ExponentVector{1.0, 1.0}, 1.0), ValidationError);
  CHECK_THROWS_AS(theorem_constant(TheoremId::T1, ExponentVector{2.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(theorem_constant(TheoremId::T4, ExponentVector{2.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(parse_theorem_id("T9"), ValidationError);
}

TEST_CASE("asymptotic law evaluation") {
  const AsymptoticLaw counting{1.5, 1, 2.0, Regime::Counting};
  CHECK(counting.evaluate(4.0) == doctest::Approx(2.0 * 8.0 * std::log(4.0)));
  const AsymptoticLaw heat{2.0, 1, 3.0, Regime::HeatTrace};
  CHECK(heat.evaluate(0.1) == doctest::Approx(3.0 * 100.0 * std::log(10.0)));
}

TEST_CASE("scaling factors are a group action") {
  for (double p : {1.0, 2.0, 3.0}) {
    for (double c : {2.0, 4.0}) {
      CHECK(potential_scaling_factor(c, p) * potential_scaling_factor(1.0 / c, p) ==
            doctest::Approx(1.0));
      CHECK(potential_scaling_factor(c * c, p) ==
            doctest::Approx(potential_scaling_factor(c, p) * potential_scaling_factor(c, p)));
      // -c Delta + V = c (-Delta + V / c).
      CHECK(laplacian_scaling_factor(c, p) ==
            doctest::Approx(c * potential_scaling_factor(1.0 / c, p)));
    }
  }
  const Spectrum s = make_spectrum({1.0, 3.0, 5.0});
  const Spectrum scaled = scale_potential_spectrum(s, 4.0, 2.0);
  CHECK(scaled.eigenvalues[1] == doctest::Approx(6.0));
}

TEST_CASE("counting function respects the reliability cutoff") {
  Spectrum s = make_spectrum({1.0, 2.0, 2.0, 5.0});
  s.reliability_cutoff = 4.0;
  CHECK(counting_function(s, 2.0) == 3);
  CHECK(counting_function(s, 0.5) == 0);
  CHECK_THROWS_AS(counting_function(s, 4.5), UntrustedRangeError);
}
