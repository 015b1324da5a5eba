#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "specasym/cli/acceptance.hpp"
#include "specasym/cli/commands.hpp"
#include "specasym/cli/config.hpp"
#include "specasym/core/errors.hpp"

using namespace specasym;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("specasym_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("config parsing, overrides and hashing") {
  ExperimentConfig c = ExperimentConfig::parse("# comment\nalpha = 2,1\nt=0.5\n\nk=40\n");
  CHECK(c.get("alpha", "") == "2,1");
  CHECK(c.get_double("t", 0.0) == 0.5);
  CHECK(c.get_int("k", 0) == 40);
  CHECK(c.get_list("alpha", {}) == std::vector<double>{2.0, 1.0});
  CHECK(c.get("missing", "x") == "x");
  const std::string h = c.hash();
  CHECK(h.size() == 16);
  ExperimentConfig d = ExperimentConfig::parse("k=40\nt=0.5\nalpha=2,1\n");
  CHECK(d.hash() == h);
  d.set("t=1");
  CHECK(d.hash() != h);
  CHECK_THROWS_AS(d.set("novalue"), ValidationError);
  CHECK_THROWS_AS(ExperimentConfig::parse("a b c\n"), ValidationError);
  CHECK_THROWS_AS(c.get_double("alpha", 0.0), ValidationError);
  c.set("seed", "0x10");
  CHECK(c.get_seed("seed", 0) == 16);
}

TEST_CASE("spectrum CSV round trip") {
  Spectrum s = make_spectrum({1.0, 2.5, 4.0}, "test");
  s.convergence = {1e-6, 2e-6, 3e-6};
  s.reliability_cutoff = 3.5;
  const fs::path dir = scratch("csv");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "s.csv");
    write_spectrum_csv(f, s, "0123456789abcdef");
  }
  CHECK(slurp(dir / "s.csv").rfind("# config_hash=0123456789abcdef\n", 0) == 0);
  const Spectrum r = read_spectrum_csv((dir / "s.csv").string());
  CHECK(r.eigenvalues == s.eigenvalues);
  CHECK(r.convergence == s.convergence);
  CHECK(r.reliability_cutoff == 3.5);
  CHECK(r.label == "test");
}

TEST_CASE("constants command writes a JSON summary") {
  const fs::path dir = scratch("constants");
  ExperimentConfig c;
  c.set("theorem", "T7");
  c.set("n", "2");
  c.set("out", dir.string());
  std::ostringstream out;
  CHECK(run_command("constants", c, out) == kExitOk);
  const auto doc = nlohmann::json::parse(slurp(dir / "constants.json"));
  CHECK(doc["outputs"]["c"].get<double>() == doctest::Approx(0.3183098861837907).epsilon(1e-15));
  CHECK(doc["config_hash"] == c.hash());
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("codes");
  ExperimentConfig bad;
  bad.set("out", dir.string());
  std::ostringstream out, err;
  CHECK(run_guarded("constants", bad, out, err) == kExitBadConfig);
  CHECK(run_guarded("no-such-command", bad, out, err) == kExitBadConfig);
  ExperimentConfig fk;
  fk.set("out", dir.string());
  fk.set("alpha", "1");
  fk.set("t", "0.5");
  fk.set("paths", "2");
  fk.set("steps", "16");
  // Two paths cannot meet the 25% relative standard error budget.
  const int code = run_guarded("fk", fk, out, err);
  CHECK((code == kExitConvergence || code == kExitOk));
  ExperimentConfig verify;
  verify.set("out", dir.string());
  verify.set("only", "12");
  CHECK(run_guarded("verify", verify, out, err) == kExitOk);
}

TEST_CASE("runs are reproducible and every file carries the hash") {
  ExperimentConfig c;
  c.set("alpha", "2,1");
  c.set("t", "0.5");
  c.set("paths", "2000");
  c.set("steps", "32");
  c.set("seed", "17");
  const fs::path a = scratch("repro_a");
  const fs::path b = scratch("repro_b");
  ExperimentConfig ca = c, cb = c;
  ca.set("out", a.string());
  cb.set("out", b.string());
  std::ostringstream out;
  REQUIRE(run_command("fk", ca, out) == kExitOk);
  REQUIRE(run_command("fk", cb, out) == kExitOk);
  const std::string fa = slurp(a / "fk.csv");
  const std::string fb = slurp(b / "fk.csv");
  CHECK(fa.find("# config_hash=" + ca.hash()) != std::string::npos);
  // The hash covers the output directory, so compare the data rows only.
  CHECK(fa.substr(fa.find('\n')) == fb.substr(fb.find('\n')));
}

TEST_CASE("eig and trace on a 1D operator") {
  const fs::path dir = scratch("eig");
  ExperimentConfig c;
  c.set("alpha", "2");
  c.set("k", "12");
  c.set("out", dir.string());
  std::ostringstream out;
  REQUIRE(run_command("eig", c, out) == kExitOk);
  const Spectrum s = read_spectrum_csv((dir / "spectrum.csv").string());
  REQUIRE(s.size() == 12);
  CHECK(s.eigenvalues[11] == doctest::Approx(23.0).epsilon(1e-7));
  ExperimentConfig t;
  t.set("spectrum", (dir / "spectrum.csv").string());
  t.set("t", "1,2");
  t.set("out", dir.string());
  REQUIRE(run_command("trace", t, out) == kExitOk);
  CHECK(fs::exists(dir / "trace_spectrum-sum.csv"));
  CHECK(fs::exists(dir / "trace_spectrum-sum.dat"));
}

TEST_CASE("lemma-logvol command") {
  const fs::path dir = scratch("logvol");
  ExperimentConfig c;
  c.set("f", "gauss");
  c.set("n", "2");
  c.set("out", dir.string());
  std::ostringstream out;
  REQUIRE(run_command("lemma-logvol", c, out) == kExitOk);
  const auto doc = nlohmann::json::parse(slurp(dir / "lemma-logvol.json"));
  CHECK(doc["outputs"]["relative_difference"].get<double>() < 1e-6);
}

TEST_CASE("acceptance report format") {
  AcceptanceReport r;
  r.criteria.push_back({1, "one", true, "ok", {"note"}, 0.0});
  r.criteria.push_back({2, "two", false, "bad", {}, 0.0});
  CHECK_FALSE(r.all_pass());
  std::ostringstream out;
  print_report(out, r);
  CHECK(out.str() == "[PASS] C1 one: ok\n    note\n[FAIL] C2 two: bad\n1/2 criteria passed\n");
}
