#include "specasym/core/exponent_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "specasym/core/errors.hpp"

namespace specasym {

ExponentVector::ExponentVector(std::initializer_list<double> alphas)
    : alphas_(alphas) {
  normalize();
}

ExponentVector::ExponentVector(std::span<const double> alphas)
    : alphas_(alphas.begin(), alphas.end()) {
  normalize();
}

ExponentVector ExponentVector::equal(std::size_t n, double alpha0) {
  std::vector<double> v(n, alpha0);
  return ExponentVector(std::span<const double>(v));
}

ExponentVector ExponentVector::parse(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<double> v;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw ValidationError("exponent vector: cannot parse '" + token + "'");
    }
    require(used == token.size(), "exponent vector: cannot parse '" + token + "'");
    v.push_back(value);
  }
  return ExponentVector(std::span<const double>(v));
}

void ExponentVector::normalize() {
  require(!alphas_.empty(), "exponent vector must have at least one entry");
  for (double a : alphas_) {
    require(std::isfinite(a) && a > 0.0, "exponents must be finite and strictly positive");
  }
  permutation_.resize(alphas_.size());
  std::iota(permutation_.begin(), permutation_.end(), std::size_t{0});
  std::stable_sort(permutation_.begin(), permutation_.end(),
                   [&](std::size_t a, std::size_t b) { return alphas_[a] > alphas_[b]; });
  std::vector<double> sorted(alphas_.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) sorted[k] = alphas_[permutation_[k]];
  alphas_ = std::move(sorted);
}

double ExponentVector::sum() const {
  return std::accumulate(alphas_.begin(), alphas_.end(), 0.0);
}

bool ExponentVector::all_equal(double rel_tol) const {
  return std::abs(alphas_.front() - alphas_.back()) <= rel_tol * alphas_.front();
}

bool ExponentVector::strictly_decreasing(double rel_tol) const {
  for (std::size_t i = 1; i < alphas_.size(); ++i) {
    if (alphas_[i - 1] - alphas_[i] <= rel_tol * alphas_[i - 1]) return false;
  }
  return true;
}

ExponentVector ExponentVector::leading() const {
  require(alphas_.size() >= 2, "leading(): needs at least two exponents");
  return ExponentVector(std::span<const double>(alphas_.data(), alphas_.size() - 1));
}

ExponentVector ExponentVector::scaled(double j) const {
  require(j > 0.0, "scaled(): factor must be positive");
  std::vector<double> v = alphas_;
  for (double& a : v) a *= j;
  return ExponentVector(std::span<const double>(v));
}

std::string ExponentVector::to_string() const {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (i) out << ',';
    out << alphas_[i];
  }
  return out.str();
}

}  // namespace specasym
