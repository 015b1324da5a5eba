#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specasym/core/spectrum.hpp"
#include "specasym/heat/heat_trace.hpp"
#include "specasym/heat/slice.hpp"

namespace specasym {

struct ChainEntry {
  TraceSource source = TraceSource::SpectrumSum;
  bool divergent = false;
  TraceValue value;
  std::string note;
};

struct ChainViolation {
  TraceSource lower = TraceSource::SpectrumSum;
  TraceSource upper = TraceSource::SpectrumSum;
  // lower.value - upper.value - (lower.error + upper.error), positive.
  double excess = 0.0;
};

struct ChainReport {
  double t = 0.0;
  std::vector<ChainEntry> entries;  // in chain order, smallest first
  std::vector<ChainViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every ordered pair of finite entries: a violation is recorded when
// a.value - b.value > a.error + b.error for a listed before b.
void find_violations(ChainReport& report);

// Z_Q <= Z_SB <= Z_SGT <= Z_cl for n = 2. Z_Q comes from the full spectrum.
ChainReport check_chain(const Spectrum& full, const SliceArtifacts& art, double t);

// Z_Q <= Z_cl for -d^2/dx^2 + |x|^gamma.
ChainReport check_chain_1d(const Spectrum& spectrum, double gamma, double t);

}  // namespace specasym
