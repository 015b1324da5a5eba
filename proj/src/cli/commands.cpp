#include "specasym/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "specasym/cli/acceptance.hpp"
#include "specasym/core/errors.hpp"
#include "specasym/core/exponent_vector.hpp"
#include "specasym/core/special_functions.hpp"
#include "specasym/core/theorems.hpp"
#include "specasym/discretize/converge.hpp"
#include "specasym/discretize/homotopy.hpp"
#include "specasym/fk/bridges.hpp"
#include "specasym/fk/fk.hpp"
#include "specasym/fk/log_volume.hpp"
#include "specasym/heat/chain.hpp"
#include "specasym/heat/heat_trace.hpp"
#include "specasym/heat/slice.hpp"
#include "specasym/tauberian/tauberian.hpp"

namespace specasym {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "1.0.0";

struct Context {
  const ExperimentConfig& config;
  std::string hash;
  fs::path dir;
  json summary;
  std::vector<std::string> files;

  explicit Context(const ExperimentConfig& c)
      : config(c), hash(c.hash()), dir(output_directory(c)) {
    fs::create_directories(dir);
  }

  std::ofstream open(const std::string& name) {
    const fs::path p = dir / name;
    std::ofstream f(p);
    require(static_cast<bool>(f), "cannot write '" + p.string() + "'");
    f.precision(17);
    files.push_back(p.string());
    return f;
  }
};

json law_json(const AsymptoticLaw& law) {
  return {{"regime", to_string(law.regime)},
          {"power", law.power},
          {"log_power", law.log_power},
          {"constant", law.constant}};
}

json spectrum_summary(const Spectrum& s) {
  double worst = 0.0;
  for (double c : s.convergence) worst = std::max(worst, std::abs(c));
  return {{"label", s.label},
          {"count", s.size()},
          {"lowest", s.empty() ? 0.0 : s.eigenvalues.front()},
          {"highest", s.empty() ? 0.0 : s.max()},
          {"reliability_cutoff", std::isfinite(s.reliability_cutoff) ? json(s.reliability_cutoff)
                                                                     : json("inf")},
          {"max_relative_change", worst}};
}

ExponentVector alpha_of(const ExperimentConfig& c, const std::string& fallback) {
  if (c.has("n") && c.has("alpha0") && !c.has("alpha")) {
    return ExponentVector::equal(static_cast<std::size_t>(c.get_int("n", 2)),
                                 c.get_double("alpha0", 1.0));
  }
  return ExponentVector::parse(c.get("alpha", fallback));
}

NdSpectrumOptions nd_options(const ExperimentConfig& c, std::size_t n, double default_energy) {
  NdSpectrumOptions o;
  o.energy = c.get_double("energy", default_energy);
  o.spacing = c.get_list("spacing", std::vector<double>(n, 0.1));
  if (o.spacing.size() == 1) o.spacing.assign(n, o.spacing[0]);
  require(o.spacing.size() == n, "spacing must have one entry or one per axis");
  o.box.safety = c.get_double("safety", o.box.safety);
  o.box.cap_factor = c.get_double("cap_factor", o.box.cap_factor);
  return o;
}

// Spectrum from the "spectrum" CSV, or computed from alpha (one entry: the
// 1D operator -d^2/dx^2 + g|x|^gamma).
Spectrum obtain_spectrum(const ExperimentConfig& c, const std::string& fallback_alpha) {
  if (c.has("spectrum")) return read_spectrum_csv(c.get("spectrum", ""));
  const ExponentVector alpha = alpha_of(c, fallback_alpha);
  if (alpha.size() == 1) {
    const double g = c.get_double("g", 1.0);
    if (c.has("k")) {
      return converged_spectrum_1d(alpha[0], g, static_cast<std::size_t>(c.get_int("k", 10)),
                                   c.get_double("rel_tol", 1e-8));
    }
    return spectrum_1d_below(alpha[0], g, c.get_double("energy", 40.0),
                             c.get_double("spacing", 0.005));
  }
  NdSpectrumOptions o = nd_options(c, alpha.size(), 10.0);
  if (c.has("k") && !c.has("energy")) {
    // Grow the energy until k eigenvalues lie below the cutoff.
    const auto k = static_cast<std::size_t>(c.get_int("k", 40));
    for (int tries = 0; tries < 12; ++tries) {
      Spectrum s = spectrum_nd(alpha, o);
      std::size_t trusted = 0;
      while (trusted < s.size() && s.eigenvalues[trusted] <= s.reliability_cutoff) ++trusted;
      if (trusted >= k) {
        s.eigenvalues.resize(k);
        s.convergence.resize(k);
        s.reliability_cutoff = std::min(s.reliability_cutoff, s.eigenvalues.back());
        return s;
      }
      o.energy *= 1.3;
    }
    throw ConvergenceError("eig: could not reach the requested number of eigenvalues");
  }
  return spectrum_nd(alpha, o);
}

void write_counting_dat(std::ostream& out, const Spectrum& s, const std::string& hash) {
  out << "# config_hash=" << hash << "\n# E N(E)\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.eigenvalues[i] > s.reliability_cutoff) break;
    out << s.eigenvalues[i] << ' ' << i + 1 << '\n';
  }
}

void write_curve(Context& ctx, const HeatTraceCurve& curve) {
  auto f = ctx.open("trace_" + to_string(curve.source) + ".csv");
  f << "# config_hash=" << ctx.hash << '\n';
  curve.write_csv(f);
  auto d = ctx.open("trace_" + to_string(curve.source) + ".dat");
  d << "# config_hash=" << ctx.hash << "\n# t value error\n";
  for (std::size_t i = 0; i < curve.t.size(); ++i) {
    d << curve.t[i] << ' ' << curve.value[i] << ' ' << curve.error[i] << '\n';
  }
}

int cmd_constants(Context& ctx) {
  const auto& c = ctx.config;
  require(c.has("theorem"), "constants: 'theorem' is required");
  const TheoremId id = parse_theorem_id(c.get("theorem", ""));
  ExponentVector alpha = c.has("alpha") ? ExponentVector::parse(c.get("alpha", ""))
                                        : ExponentVector::equal(c.get_int("n", 2),
                                                                c.get_double("alpha0", 1.0));
  std::optional<double> zeta;
  if (c.has("zeta")) zeta = c.get_double("zeta", 0.0);
  const TheoremLaw law = theorem_constant(id, alpha, zeta);
  ctx.summary["theorem"] = to_string(id);
  ctx.summary["alpha"] = alpha.values();
  ctx.summary["law"] = law_json(law.law);
  ctx.summary["c"] = law.law.constant;
  if (law.prefactors) {
    ctx.summary["prefactors"] = {{"pi_n_half", law.prefactors->pi_n_half},
                                 {"pi_one_half", law.prefactors->pi_one_half}};
  }
  return kExitOk;
}

int cmd_eig(Context& ctx, bool dirichlet) {
  const auto& c = ctx.config;
  Spectrum s;
  if (dirichlet) {
    const ExponentVector alpha = alpha_of(c, "1,1");
    require(alpha.size() >= 2, "dirichlet: alpha needs at least two entries");
    s = dirichlet_spectrum_nd(alpha, nd_options(c, alpha.size(), 60.0));
  } else {
    s = obtain_spectrum(c, "2,1");
  }
  {
    auto f = ctx.open(dirichlet ? "dirichlet_spectrum.csv" : "spectrum.csv");
    write_spectrum_csv(f, s, ctx.hash);
  }
  {
    auto f = ctx.open(dirichlet ? "dirichlet_counting.dat" : "counting.dat");
    write_counting_dat(f, s, ctx.hash);
  }
  ctx.summary["spectrum"] = spectrum_summary(s);
  return kExitOk;
}

int cmd_trace(Context& ctx) {
  const auto& c = ctx.config;
  const std::string source = c.get("source", "spectrum-sum");
  const auto ts = c.get_list("t", {0.2, 0.5, 1.0});
  const ExponentVector alpha = alpha_of(c, "2,1");
  ctx.summary["source"] = source;
  ctx.summary["alpha"] = alpha.values();
  HeatTraceOptions ho;
  ho.tail = parse_tail_mode(c.get("tail", "power-law"));
  const auto slice_options = [&] {
    SliceArtifactOptions o;
    o.base_energy = c.get_double("base_energy", o.base_energy);
    o.one_d_energy = c.get_double("one_d_energy", o.one_d_energy);
    o.one_d_spacing = c.get_double("one_d_spacing", o.one_d_spacing);
    return o;
  };
  if (source == "spectrum-sum") {
    const Spectrum s = obtain_spectrum(c, "2,1");
    HeatTraceCurve curve{TraceSource::SpectrumSum, {}, {}, {}};
    for (double t : ts) {
      const TraceValue v = heat_trace(s, t, ho);
      curve.add(t, v.value, v.error);
    }
    write_curve(ctx, curve);
    ctx.summary["spectrum"] = spectrum_summary(s);
    ctx.summary["values"] = curve.value;
    ctx.summary["errors"] = curve.error;
  } else if (source == "sliced-bread" || source == "sliced-gt" || source == "sliced-GT") {
    const SliceArtifacts art = make_slice_artifacts(alpha, slice_options());
    const bool sb = source == "sliced-bread";
    HeatTraceCurve curve{sb ? TraceSource::SlicedBread : TraceSource::SlicedGT, {}, {}, {}};
    for (double t : ts) {
      if (sb) {
        const TraceValue v = z_sliced_bread(art, t);
        curve.add(t, v.value, v.error);
      } else {
        const SgtResult r = z_sliced_gt(art, t);
        if (r.divergent) {
          ctx.summary["divergent"] = true;
          ctx.summary["certificate"] = r.certificate;
          return kExitOk;
        }
        curve.add(t, r.value.value, r.value.error);
      }
    }
    write_curve(ctx, curve);
    ctx.summary["values"] = curve.value;
    ctx.summary["errors"] = curve.error;
  } else if (source == "classical") {
    if (alpha.size() == 1) {
      HeatTraceCurve curve{TraceSource::Classical, {}, {}, {}};
      for (double t : ts) curve.add(t, z_classical_1d(alpha[0], t), 0.0);
      write_curve(ctx, curve);
      ctx.summary["values"] = curve.value;
    } else {
      const auto cert = z_classical_product_divergence(alpha);
      ctx.summary["divergent"] = cert.divergent;
      ctx.summary["exponents"] = cert.exponents;
      ctx.summary["certificate"] = cert.reason;
    }
  } else if (source == "product-bound") {
    const SeparableBound bound(alpha, c.get_double("one_d_energy", 30.0),
                               c.get_double("one_d_spacing", 0.05));
    HeatTraceCurve curve{TraceSource::ProductBound, {}, {}, {}};
    for (double t : ts) {
      const TraceValue v = bound(t);
      curve.add(t, v.value, v.error);
    }
    write_curve(ctx, curve);
    json factors = json::array();
    for (const auto& f : bound.factors()) factors.push_back({{"eta", f.eta}, {"c", f.coupling}});
    ctx.summary["factors"] = factors;
    ctx.summary["values"] = curve.value;
    ctx.summary["errors"] = curve.error;
  } else if (source == "chain") {
    const Spectrum s = obtain_spectrum(c, "2,1");
    json reports = json::array();
    bool ok = true;
    if (alpha.size() == 1) {
      for (double t : ts) {
        const ChainReport r = check_chain_1d(s, alpha[0], t);
        ok = ok && r.ok();
        reports.push_back({{"t", t}, {"ok", r.ok()}});
      }
    } else {
      const SliceArtifacts art = make_slice_artifacts(alpha, slice_options());
      for (double t : ts) {
        const ChainReport r = check_chain(s, art, t);
        json entries = json::array();
        for (const auto& e : r.entries) {
          entries.push_back({{"source", to_string(e.source)},
                             {"divergent", e.divergent},
                             {"value", e.value.value},
                             {"error", e.value.error},
                             {"note", e.note}});
        }
        json violations = json::array();
        for (const auto& v : r.violations) {
          violations.push_back(
              {{"lower", to_string(v.lower)}, {"upper", to_string(v.upper)}, {"excess", v.excess}});
        }
        ok = ok && r.ok();
        reports.push_back({{"t", t}, {"ok", r.ok()}, {"entries", entries}, {"violations", violations}});
      }
    }
    ctx.summary["chain"] = reports;
    ctx.summary["ok"] = ok;
  } else {
    throw ValidationError("trace: unknown source '" + source +
                          "' (spectrum-sum, sliced-bread, sliced-GT, classical, product-bound, "
                          "chain)");
  }
  return kExitOk;
}

int cmd_fk(Context& ctx) {
  const auto& c = ctx.config;
  const ExponentVector alpha = alpha_of(c, "2");
  const auto ts = c.get_list("t", {0.5, 1.0});
  McParams p;
  p.paths = static_cast<std::size_t>(c.get_int("paths", 100000));
  p.steps = static_cast<int>(c.get_int("steps", 128));
  p.seed = c.get_seed("seed", 0x5eed);
  const ConfinementMode mode = parse_confinement_mode(c.get("mode", "none"));
  json estimates = json::array();
  auto f = ctx.open("fk.csv");
  f << "# config_hash=" << ctx.hash << "\nt,mean,stderr,paths_kept\n";
  for (double t : ts) {
    FkEstimate e;
    if (mode == ConfinementMode::None) {
      const FkPotential v = alpha.size() == 1 ? FkPotential::one_d(alpha[0], c.get_double("g", 1.0))
                                              : FkPotential::product(alpha);
      e = fk_trace(v, t, p);
    } else {
      ConfinementPolicy policy;
      policy.mode = mode;
      policy.band = c.get_double("band", 1.0);
      policy.kappa_c = c.get_double("kappa_c", 0.0);
      e = fk_confined_lower(alpha, t, policy, p);
    }
    estimates.push_back({{"t", e.t},
                         {"mean", e.mean},
                         {"stderr", e.stderr_},
                         {"paths_kept", e.paths_kept},
                         {"paths", e.paths},
                         {"steps", e.steps},
                         {"seed", e.seed},
                         {"mode", e.mode},
                         {"kappa", e.kappa},
                         {"rigorous", e.rigorous},
                         {"convention", e.convention}});
    f << e.t << ',' << e.mean << ',' << e.stderr_ << ',' << e.paths_kept << '\n';
  }
  ctx.summary["alpha"] = alpha.values();
  ctx.summary["estimates"] = estimates;
  return kExitOk;
}

RealFunction named_integrand(const std::string& name) {
  if (name == "exp") return [](double p) { return std::exp(-p); };
  if (name == "gauss") return [](double p) { return std::exp(-p * p); };
  if (name == "cubic") return [](double p) { return 1.0 / ((1.0 + p) * (1.0 + p) * (1.0 + p)); };
  if (name == "zero") return [](double) { return 0.0; };
  throw ValidationError("lemma-logvol: unknown integrand '" + name + "' (exp, gauss, cubic, zero)");
}

int cmd_logvol(Context& ctx) {
  const auto& c = ctx.config;
  const std::string name = c.get("f", "exp");
  const RealFunction f = named_integrand(name);
  const double a = c.get_double("a", 1.0);
  const int n = static_cast<int>(c.get_int("n", 2));
  const std::string method = c.get("method", n <= 3 ? "quadrature" : "mc");
  require(method == "quadrature" || method == "mc", "lemma-logvol: method is quadrature or mc");
  const double rhs = log_volume_rhs(f, a, n);
  const auto lhs = log_volume_lhs(
      f, a, n, method == "mc" ? LogVolumeMethod::MonteCarlo : LogVolumeMethod::Quadrature,
      static_cast<std::size_t>(c.get_int("samples", 1000000)), c.get_seed("seed", 0x5eed));
  ctx.summary["f"] = name;
  ctx.summary["a"] = a;
  ctx.summary["n"] = n;
  ctx.summary["method"] = method;
  ctx.summary["rhs"] = rhs;
  ctx.summary["lhs"] = lhs.value;
  ctx.summary["lhs_error"] = lhs.error;
  ctx.summary["relative_difference"] = rhs != 0.0 ? std::abs(lhs.value - rhs) / std::abs(rhs) : 0.0;
  return kExitOk;
}

int cmd_zeta(Context& ctx) {
  const auto& c = ctx.config;
  const Spectrum s = obtain_spectrum(c, "2");
  const ZetaValue z = spectral_zeta(s, c.get_double("s", 2.0), parse_zeta_tail(c.get("tail", "weyl-power")));
  ctx.summary["spectrum"] = spectrum_summary(s);
  ctx.summary["zeta"] = {{"s", z.s},
                         {"partial_sum", z.partial_sum},
                         {"tail_estimate", z.tail_estimate},
                         {"total", z.total},
                         {"error", z.error},
                         {"growth_power", z.growth_power}};
  return kExitOk;
}

int cmd_fit(Context& ctx) {
  const auto& c = ctx.config;
  const Spectrum s = obtain_spectrum(c, "2,1");
  const FitData data = FitData::counting(s);
  std::vector<int> ds;
  for (double d : c.get_list("d", {0.0, 1.0})) ds.push_back(static_cast<int>(d));
  std::optional<FitWindow> window;
  if (c.has("window_lo") || c.has("window_hi")) {
    const FitWindow def = default_window(data);
    window = FitWindow{c.get_double("window_lo", def.lo), c.get_double("window_hi", def.hi)};
  }
  const FitResult r = fit_asymptotic(data, ds, window);
  json models = json::array();
  for (const auto& m : r.models) {
    models.push_back({{"log_power", m.log_power},
                      {"power", m.power},
                      {"constant", m.constant},
                      {"residual", m.residual}});
  }
  ctx.summary["spectrum"] = spectrum_summary(s);
  ctx.summary["law"] = law_json(r.law);
  ctx.summary["residual"] = r.residual;
  ctx.summary["window"] = {r.window.lo, r.window.hi};
  ctx.summary["samples"] = r.samples;
  ctx.summary["models"] = models;
  auto f = ctx.open("fit.csv");
  f << "# config_hash=" << ctx.hash << "\nE,N,model\n";
  for (std::size_t i = 0; i < data.x.size(); ++i) {
    if (data.x[i] < r.window.lo || data.x[i] > r.window.hi) continue;
    f << data.x[i] << ',' << data.y[i] << ',' << r.law.evaluate(data.x[i]) << '\n';
  }
  return kExitOk;
}

int cmd_homotopy(Context& ctx) {
  const auto& c = ctx.config;
  const ExponentVector alpha = alpha_of(c, "1,1");
  const auto powers = c.get_list("powers", {1, 2, 4, 8, 16, 32, 64});
  const double L = c.get_double("half_width", 5.0);
  const double h = c.get_double("spacing", 0.04);
  const auto k = static_cast<std::size_t>(c.get_int("k", 3));
  GridSpec grid;
  for (std::size_t i = 0; i < alpha.size(); ++i) grid.axes.push_back(AxisGrid::with_spacing(L, h));
  const HomotopyResult r = homotopy_to_dirichlet(alpha, powers, grid, k);
  auto f = ctx.open("homotopy.csv");
  f << "# config_hash=" << ctx.hash << "\nj,index,eigenvalue\n";
  json spectra = json::array();
  for (std::size_t p = 0; p < r.powers.size(); ++p) {
    for (std::size_t i = 0; i < r.spectra[p].size(); ++i) {
      f << r.powers[p] << ',' << i << ',' << r.spectra[p].eigenvalues[i] << '\n';
    }
    spectra.push_back({{"j", r.powers[p]},
                       {"eigenvalues", r.spectra[p].eigenvalues},
                       {"clamped", static_cast<bool>(r.clamped[p])}});
  }
  for (std::size_t i = 0; i < r.dirichlet.size(); ++i) {
    f << "inf," << i << ',' << r.dirichlet.eigenvalues[i] << '\n';
  }
  ctx.summary["grid"] = grid.to_string();
  ctx.summary["spectra"] = spectra;
  ctx.summary["dirichlet"] = r.dirichlet.eigenvalues;
  ctx.summary["worst_decrease"] = r.worst_decrease;
  ctx.summary["dim_exponents"] = homotopy_dim_exponents(alpha, powers);
  return kExitOk;
}

int cmd_verify(Context& ctx) {
  const auto& c = ctx.config;
  const std::string suite = c.get("suite", "primary");
  require(suite == "primary", "verify: the only suite is 'primary'");
  AcceptanceOptions o;
  for (double id : c.get_list("only", {})) o.only.push_back(static_cast<int>(id));
  o.log = &std::cerr;
  const AcceptanceReport report = run_acceptance(o);
  {
    auto f = ctx.open("verify_report.txt");
    f << "# config_hash=" << ctx.hash << '\n';
    print_report(f, report);
  }
  json items = json::array();
  for (const auto& r : report.criteria) {
    items.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                     {"info", r.info}});
  }
  ctx.summary["suite"] = suite;
  ctx.summary["criteria"] = items;
  ctx.summary["all_pass"] = report.all_pass();
  print_report(std::cout, report);
  return report.all_pass() ? kExitOk : kExitAcceptance;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "constants", "eig", "dirichlet", "trace", "fk", "lemma-logvol", "zeta", "fit",
      "homotopy", "verify"};
  return names;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s, const std::string& config_hash) {
  const auto old = out.precision(17);
  out << "# config_hash=" << config_hash << '\n';
  out << "# label=" << s.label << '\n';
  out << "# reliability_cutoff=" << s.reliability_cutoff << '\n';
  out << "index,eigenvalue,convergence\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << i << ',' << s.eigenvalues[i] << ',' << (i < s.convergence.size() ? s.convergence[i] : 0.0)
        << '\n';
  }
  out.precision(old);
}

Spectrum read_spectrum_csv(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open spectrum file '" + path + "'");
  Spectrum s;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string key = "# reliability_cutoff=";
      if (line.rfind(key, 0) == 0) {
        const std::string v = line.substr(key.size());
        s.reliability_cutoff = v == "inf" ? std::numeric_limits<double>::infinity() : std::stod(v);
      } else if (line.rfind("# label=", 0) == 0) {
        s.label = line.substr(8);
      }
      continue;
    }
    if (!header) {
      header = true;
      if (line.find("eigenvalue") != std::string::npos) continue;
    }
    const auto values = parse_list(line);
    require(values.size() >= 2, "spectrum file: expected index,eigenvalue[,convergence]");
    s.eigenvalues.push_back(values[1]);
    s.convergence.push_back(values.size() >= 3 ? values[2] : 0.0);
  }
  require(!s.empty(), "spectrum file '" + path + "' has no eigenvalues");
  for (std::size_t i = 1; i < s.size(); ++i) {
    require(s.eigenvalues[i] >= s.eigenvalues[i - 1], "spectrum file: eigenvalues must be sorted");
  }
  return s;
}

int run_command(const std::string& name, const ExperimentConfig& config, std::ostream& out) {
  Context ctx(config);
  int code = kExitOk;
  if (name == "constants") {
    code = cmd_constants(ctx);
  } else if (name == "eig") {
    code = cmd_eig(ctx, false);
  } else if (name == "dirichlet") {
    code = cmd_eig(ctx, true);
  } else if (name == "trace") {
    code = cmd_trace(ctx);
  } else if (name == "fk") {
    code = cmd_fk(ctx);
  } else if (name == "lemma-logvol") {
    code = cmd_logvol(ctx);
  } else if (name == "zeta") {
    code = cmd_zeta(ctx);
  } else if (name == "fit") {
    code = cmd_fit(ctx);
  } else if (name == "homotopy") {
    code = cmd_homotopy(ctx);
  } else if (name == "verify") {
    code = cmd_verify(ctx);
  } else {
    throw ValidationError("unknown subcommand '" + name + "'");
  }
  json doc;
  doc["command"] = name;
  doc["version"] = kVersion;
  doc["config_hash"] = ctx.hash;
  doc["config"] = config.entries();
  doc["seed"] = config.get_seed("seed", 0x5eed);
  doc["exit_code"] = code;
  doc["outputs"] = ctx.summary;
  doc["files"] = ctx.files;
  {
    std::ofstream f(ctx.dir / (name + ".json"));
    require(static_cast<bool>(f), "cannot write the JSON summary");
    f << doc.dump(2) << '\n';
  }
  out << doc.dump(2) << '\n';
  return code;
}

int run_guarded(const std::string& name, const ExperimentConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    return run_command(name, config, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const UntrustedRangeError& e) {
    err << "untrusted range: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadConfig;
  }
}

}  // namespace specasym
