#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace specasym {

// Uniform interior nodes of [-L, L] with Dirichlet endpoints:
// x_k = -L + (k + 1) h, k = 0..m-1, h = 2L / (m + 1).
struct AxisGrid {
  double half_width = 1.0;
  int points = 3;

  double spacing() const { return 2.0 * half_width / (points + 1); }
  double node(int k) const { return -half_width + (k + 1) * spacing(); }
  // Axis grid with spacing close to h (points rounded up to an odd count so
  // that x = 0 is a node).
  static AxisGrid with_spacing(double half_width, double h);
};

struct GridSpec {
  std::vector<AxisGrid> axes;
  std::size_t max_points = 40'000'000;

  std::size_t dimension() const { return axes.size(); }
  std::size_t total_points() const;
  // Throws ValidationError on m < 3, non-positive widths or a blown memory cap.
  void validate() const;
  // The same box with every spacing divided by ratio.
  GridSpec refined(double ratio) const;
  std::string to_string() const;
};

GridSpec uniform_grid(std::size_t n, double half_width, int points);

}  // namespace specasym
