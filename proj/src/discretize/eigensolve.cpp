#include "specasym/discretize/eigensolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "specasym/core/errors.hpp"

namespace specasym {
namespace {

Spectrum finish(std::vector<double> values, const std::string& label) {
  Spectrum s = make_spectrum(std::move(values), label);
  s.reliability_cutoff = s.empty() ? 0.0 : s.max();
  return s;
}

}  // namespace

Spectrum eigenvalues(const DiscreteOperator& op, std::size_t k, const EigenOptions& options) {
  require(k >= 1, "eigenvalues: k must be positive");
  require(static_cast<double>(k) <= options.max_fraction * static_cast<double>(op.size()),
          "eigenvalues: k = " + std::to_string(k) + " exceeds " +
              std::to_string(options.max_fraction) + " of the grid size " +
              std::to_string(op.size()));
  if (op.dimension() == 1) return finish(op.tridiagonal().lowest(k), op.description());
  SliceSolver solver(op.sparse(), options.slice);
  return finish(solver.lowest(k), op.description());
}

Spectrum eigenvalues_below(const DiscreteOperator& op, double energy, const EigenOptions& options) {
  std::vector<double> values;
  if (op.dimension() == 1) {
    values = op.tridiagonal().below(energy);
  } else {
    SliceSolver solver(op.sparse(), options.slice);
    values = solver.eigenvalues_below(energy);
  }
  require(static_cast<double>(values.size()) <= options.max_fraction * static_cast<double>(op.size()),
          "eigenvalues: " + std::to_string(values.size()) + " eigenvalues below " +
              std::to_string(energy) + " exceed the allowed fraction of the grid size");
  Spectrum s = make_spectrum(std::move(values), op.description());
  s.reliability_cutoff = energy;
  return s;
}

Spectrum sector_eigenvalues_below(std::size_t n, const SectorBuilder& build, double energy,
                                  const EigenOptions& options) {
  std::vector<double> all;
  std::string label;
  for (const auto& parities : all_parity_sectors(n)) {
    const DiscreteOperator op = build(parities);
    if (label.empty()) label = op.description();
    const Spectrum part = eigenvalues_below(op, energy, options);
    all.insert(all.end(), part.eigenvalues.begin(), part.eigenvalues.end());
  }
  Spectrum s = make_spectrum(std::move(all), label);
  s.reliability_cutoff = energy;
  return s;
}

Spectrum sector_eigenvalues(std::size_t n, const SectorBuilder& build, std::size_t k,
                            const EigenOptions& options) {
  require(k >= 1, "eigenvalues: k must be positive");
  // The k lowest of the union lie among the k lowest of every sector.
  std::vector<double> all;
  std::string label;
  for (const auto& parities : all_parity_sectors(n)) {
    const DiscreteOperator op = build(parities);
    if (label.empty()) label = op.description();
    const std::size_t kk = std::min<std::size_t>(
        k, static_cast<std::size_t>(options.max_fraction * static_cast<double>(op.size())));
    if (kk == 0) continue;
    const Spectrum part = eigenvalues(op, kk, options);
    all.insert(all.end(), part.eigenvalues.begin(), part.eigenvalues.end());
  }
  std::sort(all.begin(), all.end());
  if (all.size() < k) throw ConvergenceError("eigenvalues: sectors too small for k eigenvalues");
  all.resize(k);
  return finish(std::move(all), label);
}

std::vector<double> dense_eigenvalues(const DiscreteOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.dense(), Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, "dense eigensolve failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace specasym
