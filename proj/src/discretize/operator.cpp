#include "specasym/discretize/operator.hpp"

#include <cmath>
#include <sstream>

#include "specasym/core/errors.hpp"

namespace specasym {

AxisStencil make_axis_stencil(const AxisGrid& grid, Parity parity) {
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const int m = grid.points;
  AxisStencil s;
  s.spacing = h;
  int first = 0;
  if (parity != Parity::None) {
    first = m % 2 == 1 ? (m - 1) / 2 : m / 2;
    if (m % 2 == 1 && parity == Parity::Odd) ++first;  // u(0) = 0
  }
  for (int k = first; k < m; ++k) s.nodes.push_back(k == (m - 1) / 2 && m % 2 == 1 ? 0.0 : grid.node(k));
  const std::size_t count = s.nodes.size();
  require(count >= 1, "axis stencil: no unknowns left on the half axis");
  s.diag.assign(count, 2.0 * inv_h2);
  s.upper.assign(count > 0 ? count - 1 : 0, -inv_h2);
  if (parity == Parity::Even && m % 2 == 1 && count > 1) {
    // u(-h) = u(h); symmetrized by scaling the x = 0 unknown with sqrt(2).
    s.upper[0] = -std::sqrt(2.0) * inv_h2;
  } else if (parity != Parity::None && m % 2 == 0) {
    // Nodes at +-h/2 reflect into each other.
    s.diag[0] += parity == Parity::Even ? -inv_h2 : inv_h2;
  }
  return s;
}

DiscreteOperator DiscreteOperator::assemble(const GridSpec& grid, std::vector<Parity> parities,
                                            const PotentialFn& potential, const MaskFn& keep,
                                            std::string description) {
  grid.validate();
  const std::size_t n = grid.dimension();
  if (parities.empty()) parities.assign(n, Parity::None);
  require(parities.size() == n, "operator: one parity per axis required");

  DiscreteOperator op;
  op.grid_ = grid;
  op.parities_ = parities;
  op.description_ = std::move(description);
  std::vector<std::size_t> extent(n);
  std::size_t box = 1;
  for (std::size_t a = 0; a < n; ++a) {
    op.axes_.push_back(make_axis_stencil(grid.axes[a], parities[a]));
    extent[a] = op.axes_[a].nodes.size();
    box *= extent[a];
  }
  require(box < static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()),
          "operator: grid too large for 32-bit indexing");

  // Pass 1: select active points, row-major with the last axis fastest.
  std::vector<std::int32_t> active(box, -1);
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  std::int32_t count = 0;
  for (std::size_t lin = 0; lin < box; ++lin) {
    for (std::size_t a = 0; a < n; ++a) x[a] = op.axes_[a].nodes[idx[a]];
    const double v = potential(x);
    if (keep(x, v)) {
      active[lin] = count++;
      op.potential_.push_back(v);
      for (std::size_t a = 0; a < n; ++a) op.multi_index_.push_back(static_cast<int>(idx[a]));
    }
    for (std::size_t a = n; a-- > 0;) {
      if (++idx[a] < extent[a]) break;
      idx[a] = 0;
    }
  }
  require(count > 0, "operator: no active grid points (empty mask)");

  std::vector<std::size_t> stride(n, 1);
  for (std::size_t a = n - 1; a-- > 0;) stride[a] = stride[a + 1] * extent[a + 1];

  const std::size_t N = static_cast<std::size_t>(count);
  op.diag_.resize(N);
  op.neighbors_.assign(N * 2 * n, -1);
  op.weights_.assign(N * 2 * n, 0.0);
  for (std::size_t i = 0; i < N; ++i) {
    double d = op.potential_[i];
    std::size_t lin = 0;
    for (std::size_t a = 0; a < n; ++a) lin += op.multi_index_[i * n + a] * stride[a];
    for (std::size_t a = 0; a < n; ++a) {
      const auto& ax = op.axes_[a];
      const int k = op.multi_index_[i * n + a];
      d += ax.diag[k];
      if (k > 0) {
        const std::int32_t nb = active[lin - stride[a]];
        if (nb >= 0) {
          op.neighbors_[i * 2 * n + 2 * a] = nb;
          op.weights_[i * 2 * n + 2 * a] = ax.upper[k - 1];
        }
      }
      if (static_cast<std::size_t>(k) + 1 < extent[a]) {
        const std::int32_t nb = active[lin + stride[a]];
        if (nb >= 0) {
          op.neighbors_[i * 2 * n + 2 * a + 1] = nb;
          op.weights_[i * 2 * n + 2 * a + 1] = ax.upper[k];
        }
      }
    }
    op.diag_[i] = d;
  }
  return op;
}

void DiscreteOperator::apply(const double* in, double* out) const {
  const std::size_t slots = 2 * axes_.size();
  const std::size_t N = diag_.size();
  for (std::size_t i = 0; i < N; ++i) {
    double acc = diag_[i] * in[i];
    const std::int32_t* nb = &neighbors_[i * slots];
    const double* w = &weights_[i * slots];
    for (std::size_t s = 0; s < slots; ++s) {
      if (nb[s] >= 0) acc += w[s] * in[nb[s]];
    }
    out[i] = acc;
  }
}

Eigen::VectorXd DiscreteOperator::apply(const Eigen::VectorXd& v) const {
  require(static_cast<std::size_t>(v.size()) == size(), "operator: vector size mismatch");
  Eigen::VectorXd out(v.size());
  apply(v.data(), out.data());
  return out;
}

double DiscreteOperator::max_diagonal() const {
  double m = 0.0;
  for (double d : diag_) m = std::max(m, d);
  return m;
}

Eigen::SparseMatrix<double> DiscreteOperator::sparse() const {
  const std::size_t slots = 2 * axes_.size();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(size() * (slots + 1));
  for (std::size_t i = 0; i < size(); ++i) {
    triplets.emplace_back(static_cast<int>(i), static_cast<int>(i), diag_[i]);
    for (std::size_t s = 0; s < slots; ++s) {
      const std::int32_t nb = neighbors_[i * slots + s];
      if (nb >= 0) triplets.emplace_back(static_cast<int>(i), nb, weights_[i * slots + s]);
    }
  }
  Eigen::SparseMatrix<double> A(static_cast<int>(size()), static_cast<int>(size()));
  A.setFromTriplets(triplets.begin(), triplets.end());
  return A;
}

Eigen::MatrixXd DiscreteOperator::dense() const {
  require(size() <= 20000, "operator: too large for a dense copy");
  return Eigen::MatrixXd(sparse());
}

SymTridiagonal DiscreteOperator::tridiagonal() const {
  require(axes_.size() == 1, "operator: tridiagonal form needs a 1D operator");
  SymTridiagonal t;
  t.diag = diag_;
  t.off.assign(size() > 0 ? size() - 1 : 0, 0.0);
  for (std::size_t i = 0; i + 1 < size(); ++i) {
    if (neighbors_[2 * i + 1] == static_cast<std::int32_t>(i + 1)) t.off[i] = weights_[2 * i + 1];
  }
  return t;
}

double product_potential(const ExponentVector& alpha, std::span<const double> x) {
  double v = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) return 0.0;
    v *= std::pow(std::abs(x[i]), alpha[i]);
  }
  return v;
}

bool in_domain(const ExponentVector& alpha, std::span<const double> x) {
  const double an = alpha.smallest();
  double log_p = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) return true;
    log_p += alpha[i] / an * std::log(std::abs(x[i]));
  }
  return log_p < 0.0;
}

namespace {

std::string describe(const std::string& head, const GridSpec& grid) {
  std::ostringstream out;
  out << head << " on " << grid.to_string();
  return out.str();
}

}  // namespace

DiscreteOperator build_operator_1d(double gamma, double g, const AxisGrid& grid, Parity parity) {
  require(std::isfinite(gamma) && gamma > 0.0, "operator 1d: gamma must be positive");
  require(std::isfinite(g) && g > 0.0, "operator 1d: coupling g must be positive");
  GridSpec spec;
  spec.axes = {grid};
  auto potential = [gamma, g](std::span<const double> x) {
    return x[0] == 0.0 ? 0.0 : g * std::pow(std::abs(x[0]), gamma);
  };
  std::ostringstream head;
  head << "-d2/dx2 + " << g << "|x|^" << gamma;
  return DiscreteOperator::assemble(spec, {parity}, potential,
                                    [](std::span<const double>, double) { return true; },
                                    describe(head.str(), spec));
}

DiscreteOperator build_operator_nd(const ExponentVector& alpha, const GridSpec& grid,
                                   const NdOptions& options) {
  require(alpha.size() == grid.dimension(), "operator nd: grid dimension must match alpha");
  require(alpha.size() >= 2, "operator nd: dimension must be at least 2");
  const double cap = options.potential_cap;
  require(cap > 0.0, "operator nd: potential cap must be positive");
  auto potential = [&alpha](std::span<const double> x) { return product_potential(alpha, x); };
  return DiscreteOperator::assemble(
      grid, options.parities, potential,
      [cap](std::span<const double>, double v) { return v <= cap; },
      describe("-Delta + prod|x_i|^alpha_i, alpha=(" + alpha.to_string() + ")", grid));
}

DiscreteOperator build_dirichlet_nd(const ExponentVector& alpha, const GridSpec& grid,
                                    const std::vector<Parity>& parities) {
  require(alpha.size() == grid.dimension(), "dirichlet nd: grid dimension must match alpha");
  require(alpha.size() >= 2, "dirichlet nd: dimension must be at least 2");
  return DiscreteOperator::assemble(
      grid, parities, [](std::span<const double>) { return 0.0; },
      [&alpha](std::span<const double> x, double) { return in_domain(alpha, x); },
      describe("Dirichlet Laplacian, alpha=(" + alpha.to_string() + ")", grid));
}

DiscreteOperator build_homotopy_nd(const ExponentVector& alpha, double j, const GridSpec& grid,
                                   const NdOptions& options, double clamp_value) {
  require(alpha.size() == grid.dimension(), "homotopy: grid dimension must match alpha");
  require(std::isfinite(j) && j > 0.0, "homotopy: power j must be positive");
  require(clamp_value > 0.0, "homotopy: clamp value must be positive");
  bool clamped = false;
  const double log_clamp = std::log(clamp_value);
  auto potential = [&](std::span<const double> x) {
    double log_v = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) return 0.0;
      log_v += alpha[i] * std::log(std::abs(x[i]));
    }
    if (j * log_v > log_clamp) {
      clamped = true;
      return clamp_value;
    }
    return std::exp(j * log_v);
  };
  const double cap = options.potential_cap;
  std::ostringstream head;
  head << "-Delta + (prod|x_i|^alpha_i)^" << j << ", alpha=(" << alpha.to_string() << ")";
  auto op = DiscreteOperator::assemble(grid, options.parities, potential,
                                       [cap](std::span<const double>, double v) { return v <= cap; },
                                       describe(head.str(), grid));
  if (clamped) op.mark_clamped();
  return op;
}

std::vector<char> domain_mask(const ExponentVector& alpha, const GridSpec& grid) {
  require(alpha.size() == grid.dimension(), "domain mask: grid dimension must match alpha");
  grid.validate();
  const std::size_t n = grid.dimension();
  std::vector<char> mask(grid.total_points());
  std::vector<int> idx(n, 0);
  std::vector<double> x(n);
  for (std::size_t lin = 0; lin < mask.size(); ++lin) {
    for (std::size_t a = 0; a < n; ++a) {
      const auto& ax = grid.axes[a];
      x[a] = (ax.points % 2 == 1 && idx[a] == (ax.points - 1) / 2) ? 0.0 : ax.node(idx[a]);
    }
    mask[lin] = in_domain(alpha, x) ? 1 : 0;
    for (std::size_t a = n; a-- > 0;) {
      if (++idx[a] < grid.axes[a].points) break;
      idx[a] = 0;
    }
  }
  return mask;
}

std::vector<std::vector<Parity>> all_parity_sectors(std::size_t n) {
  std::vector<std::vector<Parity>> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<Parity> p(n);
    for (std::size_t a = 0; a < n; ++a) p[a] = (bits >> a) & 1 ? Parity::Odd : Parity::Even;
    out.push_back(p);
  }
  return out;
}

}  // namespace specasym
