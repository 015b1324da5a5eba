#include "specasym/discretize/homotopy.hpp"

#include <algorithm>

#include "specasym/core/errors.hpp"
#include "specasym/core/theorems.hpp"
#include "specasym/discretize/operator.hpp"

namespace specasym {

HomotopyResult homotopy_to_dirichlet(const ExponentVector& alpha, const std::vector<double>& powers,
                                     const GridSpec& grid, std::size_t k,
                                     const EigenOptions& options, double clamp_value) {
  require(!powers.empty(), "homotopy: at least one power required");
  for (std::size_t i = 0; i < powers.size(); ++i) {
    require(powers[i] > 0.0, "homotopy: powers must be positive");
    if (i > 0) require(powers[i] > powers[i - 1], "homotopy: powers must be ascending");
  }
  const std::size_t n = alpha.size();
  HomotopyResult result;
  result.powers = powers;
  for (double j : powers) {
    bool clamped = false;
    auto build = [&](const std::vector<Parity>& parities) {
      NdOptions o;
      o.parities = parities;
      auto op = build_homotopy_nd(alpha, j, grid, o, clamp_value);
      clamped = clamped || op.clamped();
      return op;
    };
    result.spectra.push_back(sector_eigenvalues(n, build, k, options));
    result.clamped.push_back(clamped);
  }
  result.dirichlet = sector_eigenvalues(
      n, [&](const std::vector<Parity>& p) { return build_dirichlet_nd(alpha, grid, p); }, k,
      options);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 1; s < result.spectra.size(); ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      worst = std::max(worst, result.spectra[s - 1].eigenvalues[i] - result.spectra[s].eigenvalues[i]);
    }
  }
  result.worst_decrease = result.spectra.size() > 1 ? worst : 0.0;
  return result;
}

std::vector<double> homotopy_dim_exponents(const ExponentVector& alpha,
                                           const std::vector<double>& powers) {
  std::vector<double> out;
  for (double j : powers) out.push_back(dim_exponent(alpha.scaled(j)));
  return out;
}

}  // namespace specasym
