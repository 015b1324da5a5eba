#include "specasym/heat/chain.hpp"

#include "specasym/core/errors.hpp"

namespace specasym {

void find_violations(ChainReport& report) {
  report.violations.clear();
  const auto& e = report.entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].divergent) continue;
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[j].divergent) continue;
      const double excess =
          e[i].value.value - e[j].value.value - (e[i].value.error + e[j].value.error);
      if (excess > 0.0) report.violations.push_back({e[i].source, e[j].source, excess});
    }
  }
}

ChainReport check_chain(const Spectrum& full, const SliceArtifacts& art, double t) {
  ChainReport r;
  r.t = t;
  r.entries.push_back({TraceSource::SpectrumSum, false, heat_trace(full, t), ""});
  r.entries.push_back({TraceSource::SlicedBread, false, z_sliced_bread(art, t), ""});
  const SgtResult sgt = z_sliced_gt(art, t);
  r.entries.push_back({TraceSource::SlicedGT, sgt.divergent, sgt.value, sgt.certificate});
  const auto cl = z_classical_product_divergence(art.alpha);
  r.entries.push_back({TraceSource::Classical, cl.divergent, {}, cl.reason});
  find_violations(r);
  return r;
}

ChainReport check_chain_1d(const Spectrum& spectrum, double gamma, double t) {
  ChainReport r;
  r.t = t;
  r.entries.push_back({TraceSource::SpectrumSum, false, heat_trace(spectrum, t), ""});
  TraceValue cl;
  cl.value = z_classical_1d(gamma, t);
  cl.partial = cl.value;
  r.entries.push_back({TraceSource::Classical, false, cl, ""});
  find_violations(r);
  return r;
}

}  // namespace specasym
