#pragma once

#include <functional>
#include <vector>

#include "specasym/core/spectrum.hpp"
#include "specasym/discretize/lanczos.hpp"
#include "specasym/discretize/operator.hpp"

namespace specasym {

struct EigenOptions {
  // k may not exceed this fraction of the operator size.
  double max_fraction = 0.25;
  SliceOptions slice;
};

// The k lowest eigenvalues of one discrete operator. 1D operators go through
// Sturm bisection on the tridiagonal matrix, the rest through spectrum
// slicing. The reliability cutoff is the largest returned eigenvalue.
Spectrum eigenvalues(const DiscreteOperator& op, std::size_t k, const EigenOptions& options = {});

// Every eigenvalue <= energy.
Spectrum eigenvalues_below(const DiscreteOperator& op, double energy,
                           const EigenOptions& options = {});

// Builds an operator for a given parity pattern.
using SectorBuilder = std::function<DiscreteOperator(const std::vector<Parity>&)>;

// Union over all 2^n parity sectors of the eigenvalues <= energy.
Spectrum sector_eigenvalues_below(std::size_t n, const SectorBuilder& build, double energy,
                                  const EigenOptions& options = {});
// The k lowest eigenvalues of the union of all parity sectors.
Spectrum sector_eigenvalues(std::size_t n, const SectorBuilder& build, std::size_t k,
                            const EigenOptions& options = {});

// Dense reference eigensolve (small operators only).
std::vector<double> dense_eigenvalues(const DiscreteOperator& op);

}  // namespace specasym
