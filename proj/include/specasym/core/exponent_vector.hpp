#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace specasym {

// Exponents of the product potential prod_i |x_i|^{alpha_i}.
//
// Entries are stored sorted in descending order; permutation()[k] is the
// caller's index of the k-th stored entry, so callers may pass exponents in
// any order.
class ExponentVector {
 public:
  ExponentVector(std::initializer_list<double> alphas);
  explicit ExponentVector(std::span<const double> alphas);

  static ExponentVector equal(std::size_t n, double alpha0);
  // Parses "2,1" or "2 1".
  static ExponentVector parse(const std::string& text);

  std::size_t size() const { return alphas_.size(); }
  double operator[](std::size_t i) const { return alphas_[i]; }
  const std::vector<double>& values() const { return alphas_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }

  double sum() const;
  double smallest() const { return alphas_.back(); }
  bool all_equal(double rel_tol = 1e-12) const;
  bool strictly_decreasing(double rel_tol = 1e-12) const;

  // The exponents with the last (smallest) entry removed.
  ExponentVector leading() const;
  // Every exponent multiplied by j (the homotopy family V_alpha^j).
  ExponentVector scaled(double j) const;

  std::string to_string() const;

 private:
  void normalize();

  std::vector<double> alphas_;
  std::vector<std::size_t> permutation_;
};

}  // namespace specasym
