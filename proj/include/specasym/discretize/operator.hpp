#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "specasym/core/exponent_vector.hpp"
#include "specasym/discretize/grid.hpp"
#include "specasym/discretize/tridiagonal.hpp"

namespace specasym {

// Reflection symmetry class used on one axis. Even/Odd keep only x >= 0
// (x > 0 for Odd) and impose u(-x) = +-u(x); the spectrum of the full grid
// operator is the union over all sign patterns.
enum class Parity { None, Even, Odd };

// Three-point -d^2/dx^2 on one axis (possibly a half axis), already
// symmetrized.
struct AxisStencil {
  std::vector<double> nodes;
  std::vector<double> diag;
  std::vector<double> upper;  // coupling between node k and k + 1
  double spacing = 0.0;
};

AxisStencil make_axis_stencil(const AxisGrid& grid, Parity parity);

// Finite-difference operator -Delta + V on the active points of a grid.
// Inactive points (outside a domain mask or above a potential cap) carry a
// homogeneous Dirichlet condition, as do the box edges.
class DiscreteOperator {
 public:
  using PotentialFn = std::function<double(std::span<const double>)>;
  using MaskFn = std::function<bool(std::span<const double>, double)>;

  static DiscreteOperator assemble(const GridSpec& grid, std::vector<Parity> parities,
                                   const PotentialFn& potential, const MaskFn& keep,
                                   std::string description);

  std::size_t size() const { return diag_.size(); }
  std::size_t dimension() const { return axes_.size(); }
  const GridSpec& grid() const { return grid_; }
  const std::vector<Parity>& parities() const { return parities_; }
  const std::string& description() const { return description_; }

  void apply(const double* in, double* out) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;

  double potential(std::size_t i) const { return potential_[i]; }
  double coordinate(std::size_t i, std::size_t axis) const {
    return axes_[axis].nodes[multi_index_[i * axes_.size() + axis]];
  }
  double max_diagonal() const;

  Eigen::SparseMatrix<double> sparse() const;
  Eigen::MatrixXd dense() const;
  // Only for one-dimensional operators.
  SymTridiagonal tridiagonal() const;

  bool clamped() const { return clamped_; }
  void mark_clamped() { clamped_ = true; }

 private:
  GridSpec grid_;
  std::vector<Parity> parities_;
  std::vector<AxisStencil> axes_;
  std::vector<int> multi_index_;
  std::vector<double> diag_;
  std::vector<double> potential_;
  std::vector<std::int32_t> neighbors_;  // 2n slots per point, -1 if absent
  std::vector<double> weights_;
  std::string description_;
  bool clamped_ = false;
};

// prod_i |x_i|^{alpha_i}; coordinates are in the sorted exponent order.
double product_potential(const ExponentVector& alpha, std::span<const double> x);
// Inside {prod_j |x_j|^{alpha_j / alpha_n} < 1}.
bool in_domain(const ExponentVector& alpha, std::span<const double> x);

// -d^2/dx^2 + g |x|^gamma.
DiscreteOperator build_operator_1d(double gamma, double g, const AxisGrid& grid,
                                   Parity parity = Parity::None);

struct NdOptions {
  std::vector<Parity> parities;  // empty: no symmetry reduction
  // Grid points with V above the cap are dropped (Dirichlet there).
  double potential_cap = std::numeric_limits<double>::infinity();
};

// -Delta + prod |x_i|^{alpha_i}; axis i carries exponent alpha[i].
DiscreteOperator build_operator_nd(const ExponentVector& alpha, const GridSpec& grid,
                                   const NdOptions& options = {});

// Dirichlet Laplacian on the domain points of the grid.
DiscreteOperator build_dirichlet_nd(const ExponentVector& alpha, const GridSpec& grid,
                                    const std::vector<Parity>& parities = {});

// -Delta + (prod |x_i|^{alpha_i})^j. Values above clamp_value are clamped and
// the operator is flagged.
DiscreteOperator build_homotopy_nd(const ExponentVector& alpha, double j, const GridSpec& grid,
                                   const NdOptions& options = {}, double clamp_value = 1e12);

// Domain indicator on the full grid, row-major with the last axis fastest.
std::vector<char> domain_mask(const ExponentVector& alpha, const GridSpec& grid);

// All 2^n sign patterns for an n-dimensional symmetric grid.
std::vector<std::vector<Parity>> all_parity_sectors(std::size_t n);

}  // namespace specasym
