#pragma once

#include <cstddef>
#include <vector>

namespace specasym {

// Symmetric tridiagonal matrix: diag[0..m-1], off[0..m-2].
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
  // Number of eigenvalues strictly below x (Sturm sequence count).
  std::size_t count_below(double x) const;
  // Gershgorin enclosure of the spectrum.
  double lower_bound() const;
  double upper_bound() const;
  // Eigenvalue with 0-based index i by bisection, to full double precision.
  double eigenvalue(std::size_t i) const;
  // The k lowest eigenvalues, ascending.
  std::vector<double> lowest(std::size_t k) const;
  // All eigenvalues <= energy, ascending.
  std::vector<double> below(double energy) const;
};

}  // namespace specasym
