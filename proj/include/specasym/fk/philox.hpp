#pragma once

#include <array>
#include <cstdint>

namespace specasym {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Stateless:
// the output is a pure function of (counter, key).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

// Keyed stream of uniforms and normals for one (seed, stream, index) triple;
// draw k reads block k / 2 of the counter space, so any draw can be
// recomputed independently of the others.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint32_t stream, std::uint64_t index);

  // Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  double normal();

 private:
  void refill();

  PhiloxKey key_;
  PhiloxCounter counter_;
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace specasym
