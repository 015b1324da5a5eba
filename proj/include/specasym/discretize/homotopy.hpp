#pragma once

#include <vector>

#include "specasym/core/exponent_vector.hpp"
#include "specasym/core/spectrum.hpp"
#include "specasym/discretize/eigensolve.hpp"
#include "specasym/discretize/grid.hpp"

namespace specasym {

struct HomotopyResult {
  std::vector<double> powers;
  // Lowest k eigenvalues of -Delta + (V_alpha)^j for each power j.
  std::vector<Spectrum> spectra;
  std::vector<bool> clamped;
  // Masked Dirichlet problem on the same grid.
  Spectrum dirichlet;
  // Largest drop lambda_i(j) - lambda_i(j_next) over all i and consecutive
  // powers (<= 0 when the sequences are nondecreasing).
  double worst_decrease = 0.0;
};

// Spectra of the potential family V_alpha^j, all on one grid, plus the
// masked Dirichlet spectrum they approach as j grows.
HomotopyResult homotopy_to_dirichlet(const ExponentVector& alpha, const std::vector<double>& powers,
                                     const GridSpec& grid, std::size_t k,
                                     const EigenOptions& options = {}, double clamp_value = 1e12);

// d_n of the scaled exponents j * alpha for each j.
std::vector<double> homotopy_dim_exponents(const ExponentVector& alpha,
                                           const std::vector<double>& powers);

}  // namespace specasym
