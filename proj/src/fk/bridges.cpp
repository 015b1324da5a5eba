#include "specasym/fk/bridges.hpp"

#include <algorithm>
#include <cmath>

#include "specasym/core/errors.hpp"
#include "specasym/fk/philox.hpp"

namespace specasym {

void sample_bridge(std::uint64_t seed, std::uint64_t path, double t, int steps, std::size_t n,
                   std::vector<double>& out, StreamId stream) {
  const std::size_t nodes = static_cast<std::size_t>(steps) + 1;
  out.assign(nodes * n, 0.0);
  PhiloxStream rng(seed, static_cast<std::uint32_t>(stream), path);
  const double dt = 2.0 * t / steps;
  const double sd = std::sqrt(dt);
  // Free Brownian motion, then pin the end: b(s_k) = W(s_k) - (k / M) W(2t).
  for (std::size_t k = 1; k < nodes; ++k) {
    for (std::size_t a = 0; a < n; ++a) out[k * n + a] = out[(k - 1) * n + a] + sd * rng.normal();
  }
  for (std::size_t a = 0; a < n; ++a) {
    const double end = out[(nodes - 1) * n + a];
    for (std::size_t k = 1; k < nodes; ++k) {
      out[k * n + a] -= static_cast<double>(k) / steps * end;
    }
    out[(nodes - 1) * n + a] = 0.0;
  }
}

double PathEnsemble::at(std::size_t path, int node, std::size_t axis) const {
  const std::size_t n = dimension();
  return data[(path * static_cast<std::size_t>(steps + 1) + node) * n + axis];
}

PathEnsemble sample_bridges(const std::vector<double>& x, double t, int steps, std::size_t count,
                            std::uint64_t seed) {
  require(!x.empty(), "sample_bridges: anchor point must have at least one coordinate");
  require(t > 0.0, "sample_bridges: t must be positive");
  require(steps >= 16, "sample_bridges: steps must be at least 16");
  require(count >= 1, "sample_bridges: count must be at least 1");
  PathEnsemble e{x, 2.0 * t, steps, count, seed, {}};
  const std::size_t n = x.size();
  const std::size_t per_path = static_cast<std::size_t>(steps + 1) * n;
  e.data.resize(count * per_path);
  std::vector<double> buffer;
  for (std::size_t p = 0; p < count; ++p) {
    sample_bridge(seed, p, t, steps, n, buffer);
    for (std::size_t i = 0; i < per_path; ++i) e.data[p * per_path + i] = buffer[i] + x[i % n];
  }
  return e;
}

ExitProbability exit_probability(double t, double band, std::size_t samples, std::uint64_t seed,
                                 double eps, int steps) {
  require(t > 0.0, "exit_probability: t must be positive");
  require(band > 0.0, "exit_probability: band must be positive");
  require(samples >= 1, "exit_probability: samples must be at least 1");
  require(eps >= 0.0 && eps < 1.0, "exit_probability: eps must lie in [0, 1)");
  require(steps >= 16, "exit_probability: steps must be at least 16");
  ExitProbability r;
  std::size_t exits = 0;
  std::vector<double> path;
  for (std::size_t p = 0; p < samples; ++p) {
    sample_bridge(seed, p, t, steps, 1, path, StreamId::Exit);
    double sup = 0.0;
    for (double v : path) sup = std::max(sup, std::abs(v));
    if (sup > band) ++exits;
  }
  const double p_hat = static_cast<double>(exits) / samples;
  r.empirical = p_hat;
  r.stderr_ = std::sqrt(std::max(p_hat * (1.0 - p_hat), 1e-300) / samples);
  r.bound = std::min(1.0, 2.0 * std::exp(-(1.0 - eps) * band * band / (4.0 * t)));
  r.reflection_bound = std::min(1.0, 2.0 * std::exp(-band * band / t));
  return r;
}

}  // namespace specasym
