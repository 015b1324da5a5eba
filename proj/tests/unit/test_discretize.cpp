#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/tools/roots.hpp>

#include "specasym/core/errors.hpp"
#include "specasym/discretize/converge.hpp"
#include "specasym/discretize/eigensolve.hpp"
#include "specasym/discretize/grid.hpp"
#include "specasym/discretize/homotopy.hpp"
#include "specasym/discretize/operator.hpp"
#include "specasym/discretize/tridiagonal.hpp"

using namespace specasym;

namespace {

// Levels of -d^2/dx^2 + |x|: -a'_k (even) and -a_k (odd), interleaved.
std::vector<double> airy_levels(int count) {
  std::vector<double> out;
  for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
    const double zero = -boost::math::airy_ai_zero<double>(k);
    // Zero of Ai' between consecutive zeros of Ai (or below the first one).
    const double lo = k == 1 ? 0.5 : -boost::math::airy_ai_zero<double>(k - 1);
    auto f = [](double x) { return boost::math::airy_ai_prime(-x); };
    boost::math::tools::eps_tolerance<double> tol(50);
    std::uintmax_t iters = 200;
    const auto bracket = boost::math::tools::toms748_solve(f, lo, zero, tol, iters);
    out.push_back(0.5 * (bracket.first + bracket.second));
    out.push_back(zero);
  }
  out.resize(count);
  return out;
}

}  // namespace

TEST_CASE("airy oracle values are frozen") {
  const auto levels = airy_levels(6);
  CHECK(levels[0] == doctest::Approx(1.018792971647471).epsilon(1e-13));
  CHECK(levels[1] == doctest::Approx(2.338107410459767).epsilon(1e-13));
  CHECK(levels[2] == doctest::Approx(3.248197582179837).epsilon(1e-13));
  CHECK(levels[5] == doctest::Approx(5.520559828095552).epsilon(1e-13));
}

TEST_CASE("grid geometry") {
  const AxisGrid g = AxisGrid::with_spacing(5.0, 0.1);
  CHECK(g.points % 2 == 1);
  CHECK(g.spacing() <= 0.1);
  CHECK(g.node(g.points / 2) == doctest::Approx(0.0).epsilon(1e-14));
  GridSpec spec = uniform_grid(2, 3.0, 9);
  CHECK(spec.total_points() == 81);
  CHECK_THROWS_AS(uniform_grid(2, 3.0, 1).validate(), ValidationError);
  spec.max_points = 10;
  CHECK_THROWS_AS(spec.validate(), ValidationError);
}

TEST_CASE("sturm bisection matches a dense solve") {
  SymTridiagonal t;
  for (int i = 0; i < 60; ++i) t.diag.push_back(2.0 + 0.1 * std::sin(i));
  for (int i = 0; i < 59; ++i) t.off.push_back(-1.0 + 0.05 * std::cos(i));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(60, 60);
  for (int i = 0; i < 60; ++i) m(i, i) = t.diag[i];
  for (int i = 0; i < 59; ++i) m(i, i + 1) = m(i + 1, i) = t.off[i];
  const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
  const auto low = t.lowest(20);
  for (int i = 0; i < 20; ++i) CHECK(low[i] == doctest::Approx(ref[i]).epsilon(1e-13));
  CHECK(t.eigenvalue(7) == doctest::Approx(ref[7]).epsilon(1e-13));
  CHECK(t.below(ref[4] + 1e-9).size() == 5);
  CHECK(t.count_below(ref[10] + 1e-9) == 11);
}

TEST_CASE("parity sectors reproduce the full-grid spectrum") {
  const GridSpec grid = uniform_grid(2, 3.0, 15);
  const ExponentVector alpha{2.0, 1.0};
  const auto full = dense_eigenvalues(build_operator_nd(alpha, grid));
  const Spectrum sectors = sector_eigenvalues(
      2,
      [&](const std::vector<Parity>& p) {
        NdOptions o;
        o.parities = p;
        return build_operator_nd(alpha, grid, o);
      },
      30);
  for (std::size_t i = 0; i < 30; ++i) {
    CHECK(sectors.eigenvalues[i] == doctest::Approx(full[i]).epsilon(1e-10));
  }
}

TEST_CASE("sparse eigensolver agrees with the dense reference") {
  const GridSpec grid = uniform_grid(2, 4.0, 31);
  const DiscreteOperator op = build_operator_nd({1.0, 1.0}, grid);
  const auto dense = dense_eigenvalues(op);
  const Spectrum s = eigenvalues(op, 12);
  for (std::size_t i = 0; i < 12; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(dense[i]).epsilon(1e-9));
  const Spectrum below = eigenvalues_below(op, dense[8]);
  CHECK(below.size() >= 9);
}

TEST_CASE("converged 1D spectra match exact oracles") {
  const Spectrum h = converged_spectrum_1d(2.0, 1.0, 8, 1e-9);
  for (std::size_t k = 0; k < 8; ++k) CHECK(h.eigenvalues[k] == doctest::Approx(2.0 * k + 1).epsilon(1e-7));
  const Spectrum a = converged_spectrum_1d(1.0, 1.0, 6, 1e-9);
  const auto oracle = airy_levels(6);
  for (std::size_t k = 0; k < 6; ++k) CHECK(a.eigenvalues[k] == doctest::Approx(oracle[k]).epsilon(1e-6));
  // Coupling g: the oscillator -d^2 + 4x^2 has levels 2(2k+1).
  const Spectrum g = converged_spectrum_1d(2.0, 4.0, 4, 1e-9);
  for (std::size_t k = 0; k < 4; ++k) CHECK(g.eigenvalues[k] == doctest::Approx(2.0 * (2.0 * k + 1)).epsilon(1e-7));
}

TEST_CASE("spectrum below an energy") {
  const Spectrum s = spectrum_1d_below(2.0, 1.0, 30.0, 0.01);
  CHECK(s.size() == 15);
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(s.eigenvalues[k] == doctest::Approx(2.0 * k + 1).epsilon(1e-5));
  CHECK(ground_energy_1d(2.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(ground_energy_1d(1.0) == doctest::Approx(1.018792971647471).epsilon(1e-7));
  CHECK(wkb_eigenvalue_1d(2.0, 1.0, 5) == doctest::Approx(11.0).epsilon(1e-6));
}

TEST_CASE("2D product spectrum is ordered and lies above the transverse thresholds") {
  NdSpectrumOptions o;
  o.energy = 8.0;
  o.spacing = {0.1, 0.1};
  const Spectrum s = spectrum_nd({2.0, 1.0}, o);
  REQUIRE(s.size() > 3);
  CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
  CHECK(s.reliability_cutoff <= 8.0);
  // Frozen reference value of the ground state from this solver.
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0956).epsilon(0.01));
  CHECK(s.eigenvalues[0] > 0.0);
}

TEST_CASE("channel thresholds follow the scaling relation") {
  const ExponentVector alpha{2.0, 1.0};
  const double e1 = transverse_ground_energy(alpha, 1);
  CHECK(e1 == doctest::Approx(1.0).epsilon(1e-7));
  // Along x_2 the transverse operator is -d^2 + x_2^2 |x_1|... at |x_2|=4:
  // -d^2 + 4 x^2 has ground energy 2.
  CHECK(channel_threshold(alpha, 1, 4.0) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(dirichlet_channel_threshold({1.0, 1.0}, 1, 2.0) ==
        doctest::Approx(std::pow(std::acos(-1.0) * 2.0 / 2.0, 2)).epsilon(1e-9));
}

TEST_CASE("homotopy spectra approach the Dirichlet spectrum from below") {
  GridSpec grid;
  grid.axes = {AxisGrid::with_spacing(3.0, 0.12), AxisGrid::with_spacing(3.0, 0.12)};
  const HomotopyResult r = homotopy_to_dirichlet({1.0, 1.0}, {1, 2, 4, 8}, grid, 3);
  // V^j decreases with j where |xy| < 1, so the lowest level dips from j = 1
  // to j = 2 before rising toward the Dirichlet value.
  CHECK(r.worst_decrease == doctest::Approx(0.0172139).epsilon(1e-4));
  for (std::size_t p = 2; p < r.powers.size(); ++p) {
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(r.spectra[p].eigenvalues[i] > r.spectra[p - 1].eigenvalues[i]);
    }
  }
  for (std::size_t p = 0; p < r.powers.size(); ++p) {
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(r.spectra[p].eigenvalues[i] <= r.dirichlet.eigenvalues[i] + 1e-9);
    }
  }
  const auto d = homotopy_dim_exponents({1.0, 1.0}, {1, 2});
  CHECK(d[0] == doctest::Approx(1.5));
  CHECK(d[1] == doctest::Approx(1.0));
}
