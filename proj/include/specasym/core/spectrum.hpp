#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace specasym {

// Lowest eigenvalues of a discretized operator, ascending.
struct Spectrum {
  std::vector<double> eigenvalues;
  // Relative change of each eigenvalue under the last grid refinement.
  std::vector<double> convergence;
  // Energy above which box truncation can no longer be trusted.
  double reliability_cutoff = std::numeric_limits<double>::infinity();
  std::string label;

  std::size_t size() const { return eigenvalues.size(); }
  bool empty() const { return eigenvalues.empty(); }
  double max() const { return eigenvalues.back(); }
};

// Wraps a plain list; convergence estimates are zero (exact values).
Spectrum make_spectrum(std::vector<double> eigenvalues, std::string label = "");

// Number of eigenvalues <= energy. Throws UntrustedRangeError above the
// reliability cutoff.
std::size_t counting_function(const Spectrum& spectrum, double energy);

}  // namespace specasym
