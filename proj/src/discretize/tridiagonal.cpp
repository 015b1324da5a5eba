#include "specasym/discretize/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specasym/core/errors.hpp"

namespace specasym {

std::size_t SymTridiagonal::count_below(double x) const {
  constexpr double tiny = 1e-300;
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double b2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    d = diag[i] - x - (i == 0 ? 0.0 : b2 / d);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

double SymTridiagonal::lower_bound() const {
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < diag.size()) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
  }
  return lo;
}

double SymTridiagonal::upper_bound() const {
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < diag.size()) r += std::abs(off[i]);
    hi = std::max(hi, diag[i] + r);
  }
  return hi;
}

double SymTridiagonal::eigenvalue(std::size_t i) const {
  require(i < diag.size(), "tridiagonal: eigenvalue index out of range");
  require(off.size() + 1 == diag.size(), "tridiagonal: off-diagonal has wrong length");
  double lo = lower_bound();
  double hi = upper_bound();
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)))
      break;
    if (count_below(mid) > i) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

constexpr std::size_t kBatch = 8;

// Sturm counts at up to kBatch shifts at once; the independent recurrences
// interleave and hide the division latency.
void count_below_batch(const SymTridiagonal& T, const std::vector<double>& b2, const double* x,
                       std::size_t k, std::size_t* counts) {
  constexpr double tiny = 1e-300;
  double d[kBatch];
  std::size_t c[kBatch] = {};
  for (std::size_t j = 0; j < kBatch; ++j) d[j] = 1.0;
  const std::size_t m = T.diag.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double a = T.diag[i];
    const double b = b2[i];
    for (std::size_t j = 0; j < kBatch; ++j) {
      double v = a - x[j] - b / d[j];
      v = v == 0.0 ? -tiny : v;
      c[j] += v < 0.0;
      d[j] = v;
    }
  }
  for (std::size_t j = 0; j < k; ++j) counts[j] = c[j];
}

}  // namespace

std::vector<double> SymTridiagonal::lowest(std::size_t k) const {
  require(k <= diag.size(), "tridiagonal: more eigenvalues requested than the matrix size");
  require(off.size() + 1 == diag.size(), "tridiagonal: off-diagonal has wrong length");
  if (k == 0) return {};
  std::vector<double> b2(diag.size(), 0.0);
  for (std::size_t i = 1; i < diag.size(); ++i) b2[i] = off[i - 1] * off[i - 1];
  std::vector<double> lo(k, lower_bound());
  std::vector<double> hi(k, upper_bound());
  const auto done = [&](std::size_t i) {
    const double mid = 0.5 * (lo[i] + hi[i]);
    return mid <= lo[i] || mid >= hi[i] ||
           hi[i] - lo[i] <=
               4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo[i]), std::abs(hi[i]));
  };
  std::size_t next = 0;
  std::vector<std::size_t> active;
  double x[kBatch];
  std::size_t counts[kBatch];
  while (true) {
    active.erase(std::remove_if(active.begin(), active.end(), done), active.end());
    while (active.size() < kBatch && next < k) {
      if (!done(next)) active.push_back(next);
      ++next;
    }
    if (active.empty()) break;
    for (std::size_t j = 0; j < kBatch; ++j) {
      const std::size_t i = active[std::min(j, active.size() - 1)];
      x[j] = 0.5 * (lo[i] + hi[i]);
    }
    count_below_batch(*this, b2, x, active.size(), counts);
    for (std::size_t j = 0; j < active.size(); ++j) {
      // Every count tightens all brackets it separates.
      const std::size_t c = std::min(counts[j], k);
      for (std::size_t i = c; i > 0; --i) {
        if (hi[i - 1] <= x[j]) break;
        hi[i - 1] = x[j];
      }
      for (std::size_t i = c; i < k; ++i) {
        if (lo[i] >= x[j]) break;
        lo[i] = x[j];
      }
    }
  }
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = 0.5 * (lo[i] + hi[i]);
  return out;
}

std::vector<double> SymTridiagonal::below(double energy) const {
  // count_below is strict; nudge so that eigenvalues equal to energy count.
  const std::size_t k = count_below(std::nextafter(energy, std::numeric_limits<double>::infinity()));
  return lowest(k);
}

}  // namespace specasym
