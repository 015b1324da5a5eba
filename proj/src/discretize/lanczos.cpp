#include "specasym/discretize/lanczos.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "specasym/core/errors.hpp"

namespace specasym {
namespace {

// Interval (a, b] with the eigenvalue counts below each end.
struct Window {
  double a, b;
  std::size_t below_a, below_b;
  std::size_t count() const { return below_b - below_a; }
};

}  // namespace

SliceSolver::SliceSolver(Eigen::SparseMatrix<double> matrix, SliceOptions options)
    : matrix_(std::move(matrix)), options_(options) {
  require(matrix_.rows() == matrix_.cols() && matrix_.rows() > 0,
          "slice solver: matrix must be square and non-empty");
  require(options_.window_size >= 1, "slice solver: window size must be positive");
  matrix_.makeCompressed();
  identity_.resize(matrix_.rows(), matrix_.cols());
  identity_.setIdentity();
  scale_ = 0.0;
  for (int k = 0; k < matrix_.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(matrix_, k); it; ++it) {
      scale_ = std::max(scale_, std::abs(it.value()));
    }
  }
  if (scale_ == 0.0) scale_ = 1.0;
  factor_.analyzePattern(matrix_);
}

double SliceSolver::factorize(double sigma) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::SparseMatrix<double> shifted = matrix_ - sigma * identity_;
    factor_.factorize(shifted);
    ++stats_.factorizations;
    bool ok = factor_.info() == Eigen::Success;
    if (ok) {
      const auto& d = factor_.vectorD();
      for (Eigen::Index i = 0; i < d.size(); ++i) {
        if (!std::isfinite(d[i]) || std::abs(d[i]) < 1e-14 * scale_) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return sigma;
    sigma += 1e-9 * scale_ * (attempt + 1);
  }
  throw ConvergenceError("slice solver: A - sigma I stays singular near sigma = " +
                         std::to_string(sigma));
}

std::size_t SliceSolver::inertia() const {
  const auto& d = factor_.vectorD();
  std::size_t negative = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) negative += d[i] < 0.0;
  return negative;
}

std::size_t SliceSolver::count_below(double sigma) {
  factorize(sigma);
  return inertia();
}

std::vector<double> SliceSolver::window(double a, double b, std::size_t expected) {
  const Eigen::Index N = matrix_.rows();
  const double sigma = factorize(0.5 * (a + b));
  ++stats_.windows;

  std::mt19937_64 rng(options_.seed ^ (0x9e3779b97f4a7c15ULL * ++stream_));
  std::normal_distribution<double> normal;

  std::vector<double> found;
  Eigen::MatrixXd locked(N, 0);
  const Eigen::Index max_basis = std::min<Eigen::Index>(N, static_cast<Eigen::Index>(3 * expected + 40));

  for (int restart = 0; restart <= options_.max_restarts && found.size() < expected; ++restart) {
    if (restart > 0) ++stats_.restarts;
    const std::size_t needed = expected - found.size();
    const Eigen::Index basis_cap = std::min<Eigen::Index>(max_basis, N - locked.cols());
    if (basis_cap <= 0) break;
    Eigen::MatrixXd Q(N, basis_cap);
    std::vector<double> alpha, beta;

    Eigen::VectorXd q(N);
    for (Eigen::Index i = 0; i < N; ++i) q[i] = normal(rng);
    for (int pass = 0; pass < 2 && locked.cols() > 0; ++pass) q -= locked * (locked.transpose() * q);
    q.normalize();

    Eigen::Index m = 0;
    Eigen::VectorXd w(N);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small;
    bool done = false;
    while (!done && m < basis_cap) {
      Q.col(m) = q;
      w = factor_.solve(q);
      ++stats_.solves;
      const double a_m = q.dot(w);
      alpha.push_back(a_m);
      w -= a_m * q;
      if (m > 0) w -= beta.back() * Q.col(m - 1);
      // Classical Gram-Schmidt against the basis and the locked vectors,
      // repeated when cancellation is severe (DGKS criterion).
      double b_m = w.norm();
      for (int pass = 0; pass < 3; ++pass) {
        const double before = b_m;
        w -= Q.leftCols(m + 1) * (Q.leftCols(m + 1).transpose() * w);
        if (locked.cols() > 0) w -= locked * (locked.transpose() * w);
        b_m = w.norm();
        if (b_m > 0.7071 * before) break;
      }
      beta.push_back(b_m);
      ++m;

      const bool exhausted = b_m < 1e-12 * std::abs(a_m) || m == basis_cap;
      if (exhausted || (m >= static_cast<Eigen::Index>(needed) && m % 5 == 0)) {
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
          T(i, i) = alpha[i];
          if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
        }
        small.compute(T);
        std::size_t converged = 0;
        for (Eigen::Index i = 0; i < m; ++i) {
          const double theta = small.eigenvalues()[i];
          if (theta == 0.0) continue;
          const double lambda = sigma + 1.0 / theta;
          const double residual = std::abs(b_m * small.eigenvectors()(m - 1, i));
          if (lambda > a && lambda <= b && residual <= options_.tolerance * std::abs(theta)) {
            ++converged;
          }
        }
        if (converged >= needed || exhausted) done = true;
      }
      if (!done) q = w / b_m;
    }

    // Lock every converged Ritz pair inside the window.
    std::vector<Eigen::Index> keep;
    const double b_last = beta.back();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double theta = small.eigenvalues()[i];
      if (theta == 0.0) continue;
      const double lambda = sigma + 1.0 / theta;
      const double residual = std::abs(b_last * small.eigenvectors()(m - 1, i));
      if (lambda > a && lambda <= b && residual <= options_.tolerance * std::abs(theta)) {
        keep.push_back(i);
        found.push_back(lambda);
      }
    }
    if (!keep.empty()) {
      Eigen::MatrixXd vectors(N, static_cast<Eigen::Index>(keep.size()));
      for (std::size_t c = 0; c < keep.size(); ++c) {
        vectors.col(static_cast<Eigen::Index>(c)) = Q.leftCols(m) * small.eigenvectors().col(keep[c]).head(m);
      }
      Eigen::MatrixXd grown(N, locked.cols() + vectors.cols());
      grown << locked, vectors;
      // Re-orthonormalize so deflation stays clean.
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(grown);
      locked = qr.householderQ() * Eigen::MatrixXd::Identity(N, grown.cols());
    }
  }

  if (found.size() != expected) {
    throw ConvergenceError("slice solver: found " + std::to_string(found.size()) + " of " +
                           std::to_string(expected) + " eigenvalues in (" + std::to_string(a) +
                           ", " + std::to_string(b) + "]");
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<double> SliceSolver::eigenvalues_in(double a, double b) {
  require(b > a, "slice solver: empty interval");
  constexpr double inf = std::numeric_limits<double>::infinity();
  // count_below is strict, so shift both ends up by one ulp for (a, b].
  const double lo = std::nextafter(a, inf);
  const double hi = std::nextafter(b, inf);
  std::vector<Window> todo{{lo, hi, count_below(lo), count_below(hi)}};
  std::vector<Window> ready;
  while (!todo.empty()) {
    Window w = todo.back();
    todo.pop_back();
    if (w.count() == 0) continue;
    if (w.count() <= options_.window_size || w.b - w.a < 1e-8 * scale_) {
      ready.push_back(w);
      continue;
    }
    const double mid = 0.5 * (w.a + w.b);
    const std::size_t below_mid = count_below(mid);
    todo.push_back({mid, w.b, below_mid, w.below_b});
    todo.push_back({w.a, mid, w.below_a, below_mid});
  }
  std::sort(ready.begin(), ready.end(), [](const Window& x, const Window& y) { return x.a < y.a; });
  std::vector<double> out;
  for (const auto& w : ready) {
    // window() works on (a, b]; the ends here are already strict bounds.
    auto part = window(std::nextafter(w.a, -inf), std::nextafter(w.b, -inf), w.count());
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> SliceSolver::eigenvalues_below(double energy) {
  // Start at 0 when the matrix is positive definite (all operators built
  // here are), otherwise at the Gershgorin lower bound.
  double lower = 0.0;
  if (count_below(0.0) > 0) {
    lower = std::numeric_limits<double>::infinity();
    for (int k = 0; k < matrix_.outerSize(); ++k) {
      double diag = 0.0, off = 0.0;
      for (Eigen::SparseMatrix<double>::InnerIterator it(matrix_, k); it; ++it) {
        if (it.row() == it.col()) diag = it.value();
        else off += std::abs(it.value());
      }
      lower = std::min(lower, diag - off);
    }
    lower -= 1e-6 * scale_;
  }
  if (energy <= lower) return {};
  return eigenvalues_in(lower, energy);
}

std::vector<double> SliceSolver::lowest(std::size_t k) {
  require(k >= 1 && k <= size(), "slice solver: k out of range");
  double lo = 0.0;
  double hi = 1.0;
  for (int k2 = 0; k2 < matrix_.outerSize(); ++k2) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(matrix_, k2); it; ++it) {
      if (it.row() == it.col()) hi = std::max(hi, 1e-3 * it.value());
    }
  }
  // Grow until at least k eigenvalues lie below, then tighten by bisection.
  while (count_below(hi) < k) {
    lo = hi;
    hi *= 2.0;
    require(std::isfinite(hi), "slice solver: could not bracket the lowest eigenvalues");
  }
  for (int iter = 0; iter < 40; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const std::size_t c = count_below(mid);
    if (c >= k) {
      hi = mid;
      if (c <= k + k / 4 + 2) break;
    } else {
      lo = mid;
    }
  }
  auto all = eigenvalues_below(hi);
  if (all.size() < k) throw ConvergenceError("slice solver: fewer eigenvalues than requested");
  all.resize(k);
  return all;
}

}  // namespace specasym
