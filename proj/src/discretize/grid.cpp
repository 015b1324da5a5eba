#include "specasym/discretize/grid.hpp"

#include <cmath>
#include <sstream>

#include "specasym/core/errors.hpp"

namespace specasym {

AxisGrid AxisGrid::with_spacing(double half_width, double h) {
  require(half_width > 0.0 && h > 0.0, "axis grid: width and spacing must be positive");
  int m = static_cast<int>(std::ceil(2.0 * half_width / h)) - 1;
  if (m < 3) m = 3;
  if (m % 2 == 0) ++m;
  return {half_width, m};
}

std::size_t GridSpec::total_points() const {
  std::size_t total = 1;
  for (const auto& a : axes) total *= static_cast<std::size_t>(a.points);
  return total;
}

void GridSpec::validate() const {
  require(!axes.empty(), "grid: at least one axis required");
  for (const auto& a : axes) {
    require(std::isfinite(a.half_width) && a.half_width > 0.0, "grid: half width must be positive");
    require(a.points >= 3, "grid: at least 3 points per axis");
  }
  double total = 1.0;
  for (const auto& a : axes) total *= a.points;
  require(total <= static_cast<double>(max_points),
          "grid: " + std::to_string(static_cast<long long>(total)) +
              " points exceed the memory cap of " + std::to_string(max_points));
}

GridSpec GridSpec::refined(double ratio) const {
  require(ratio > 0.0, "grid: refinement ratio must be positive");
  GridSpec out = *this;
  for (auto& a : out.axes) {
    // Keep the parity of m so symmetric grids stay symmetric.
    int m = static_cast<int>(std::lround((a.points + 1) * ratio)) - 1;
    if ((m - a.points) % 2 != 0) ++m;
    a.points = std::max(m, 3);
  }
  return out;
}

std::string GridSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i) out << " x ";
    out << "[L=" << axes[i].half_width << ", m=" << axes[i].points << ", h=" << axes[i].spacing()
        << "]";
  }
  return out.str();
}

GridSpec uniform_grid(std::size_t n, double half_width, int points) {
  GridSpec g;
  g.axes.assign(n, AxisGrid{half_width, points});
  return g;
}

}  // namespace specasym
