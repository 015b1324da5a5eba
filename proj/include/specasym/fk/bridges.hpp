#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specasym {

// Convention: Tr e^{-tH} = (4 pi t)^{-n/2} int E_{x,x;2t}[exp(-1/2 int_0^{2t}
// V(b(s)) ds)] dx with b a standard Brownian bridge (variance s per unit
// time) over the horizon [0, 2t]. The bridge midpoint variance is t/2.
inline constexpr const char* kBridgeConvention =
    "standard-bridge horizon=2t weight=exp(-1/2 int V) prefactor=(4 pi t)^{-n/2}";

// Random-stream identifiers of the Philox counter space.
enum class StreamId : std::uint32_t { Bridge = 1, Anchor = 2, LogVolume = 3, Exit = 4 };

// Bridge of a standard Brownian motion pinned at 0 at s = 0 and s = 2t,
// sampled at the M + 1 nodes s_k = 2t k / M (exact in distribution at the
// nodes). Row-major: out[k * n + axis].
void sample_bridge(std::uint64_t seed, std::uint64_t path, double t, int steps, std::size_t n,
                   std::vector<double>& out, StreamId stream = StreamId::Bridge);

struct PathEnsemble {
  std::vector<double> anchor;
  double horizon = 0.0;  // 2t
  int steps = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  // Positions, path-major: data[(p * (steps + 1) + k) * n + axis].
  std::vector<double> data;

  std::size_t dimension() const { return anchor.size(); }
  double at(std::size_t path, int node, std::size_t axis) const;
};

PathEnsemble sample_bridges(const std::vector<double>& x, double t, int steps, std::size_t count,
                            std::uint64_t seed);

struct ExitProbability {
  double empirical = 0.0;
  double stderr_ = 0.0;
  // C(eps) e^{-(1 - eps) band^2 / (4t)} with C(eps) = 2.
  double bound = 0.0;
  // Reflection-principle value 2 e^{-band^2 / t} bounding the two-sided
  // exit probability of the continuous bridge over [0, 2t].
  double reflection_bound = 0.0;
};

// Fraction of 1D bridges over [0, 2t] whose sup |b(s)| exceeds the band.
ExitProbability exit_probability(double t, double band, std::size_t samples, std::uint64_t seed,
                                 double eps = 0.1, int steps = 256);

}  // namespace specasym
