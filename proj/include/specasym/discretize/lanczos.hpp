#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <cstdint>
#include <vector>

namespace specasym {

struct SliceOptions {
  // Target number of eigenvalues per shift window.
  std::size_t window_size = 24;
  // Relative Ritz residual |beta s| / |theta| accepted as converged.
  double tolerance = 1e-9;
  int max_restarts = 10;
  std::uint64_t seed = 0x5eed;
};

struct SliceStats {
  std::size_t factorizations = 0;
  std::size_t solves = 0;
  std::size_t windows = 0;
  std::size_t restarts = 0;
};

// Spectrum slicing for a sparse symmetric matrix: LDL^T factorizations of
// A - sigma I give exact eigenvalue counts (Sylvester inertia), and
// shift-invert Lanczos with full reorthogonalization and locking finds the
// eigenvalues inside each counted window.
class SliceSolver {
 public:
  explicit SliceSolver(Eigen::SparseMatrix<double> matrix, SliceOptions options = {});

  std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
  // Number of eigenvalues strictly below sigma.
  std::size_t count_below(double sigma);
  // All eigenvalues in (a, b], ascending.
  std::vector<double> eigenvalues_in(double a, double b);
  // All eigenvalues <= energy, ascending.
  std::vector<double> eigenvalues_below(double energy);
  // The k lowest eigenvalues, ascending.
  std::vector<double> lowest(std::size_t k);

  const SliceStats& stats() const { return stats_; }

 private:
  using Factor = Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Lower,
                                       Eigen::AMDOrdering<int>>;
  // Factors A - sigma I, nudging sigma off exact singularities. Returns the
  // shift actually used.
  double factorize(double sigma);
  std::size_t inertia() const;
  std::vector<double> window(double a, double b, std::size_t expected);

  Eigen::SparseMatrix<double> matrix_;
  Eigen::SparseMatrix<double> identity_;
  SliceOptions options_;
  SliceStats stats_;
  double scale_ = 1.0;
  Factor factor_;
  std::uint64_t stream_ = 0;
};

}  // namespace specasym
