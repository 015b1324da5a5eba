#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specasym/cli/commands.hpp"
#include "specasym/cli/config.hpp"
#include "specasym/core/errors.hpp"

namespace {

// Config keys exposed as --key flags, per subcommand.
const std::map<std::string, std::vector<std::string>>& command_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"constants", {"theorem", "alpha", "n", "alpha0", "zeta"}},
      {"eig", {"alpha", "n", "alpha0", "g", "k", "energy", "spacing", "safety", "cap_factor",
               "rel_tol"}},
      {"dirichlet", {"alpha", "n", "alpha0", "energy", "spacing", "safety"}},
      {"trace", {"alpha", "source", "t", "tail", "spectrum", "g", "k", "energy", "spacing",
                 "safety", "base_energy", "one_d_energy", "one_d_spacing"}},
      {"fk", {"alpha", "g", "t", "paths", "steps", "seed", "mode", "band", "kappa_c"}},
      {"lemma-logvol", {"f", "a", "n", "method", "samples", "seed"}},
      {"zeta", {"alpha", "g", "s", "tail", "spectrum", "k", "energy", "spacing", "safety"}},
      {"fit", {"alpha", "d", "window_lo", "window_hi", "spectrum", "energy", "spacing", "safety"}},
      {"homotopy", {"alpha", "powers", "half_width", "spacing", "k"}},
      {"verify", {"suite", "only"}},
  };
  return keys;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral asymptotics of product-potential Schroedinger operators"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  app.add_option("-c,--config", config_path, "key=value configuration file");
  app.add_option("-s,--set", overrides, "override key=value (repeatable)");
  app.add_option("-o,--out", out_dir, "output directory (default $SPECASYM_OUT or ./out)");

  std::map<std::string, std::map<std::string, std::string>> flag_values;
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : specasym::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    auto& values = flag_values[name];
    for (const auto& key : command_keys().at(name)) {
      sub->add_option("--" + key, values[key]);
    }
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : specasym::kExitBadConfig;
  }

  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }
  try {
    specasym::ExperimentConfig config;
    if (!config_path.empty()) config = specasym::ExperimentConfig::load(config_path);
    for (const auto& [key, value] : flag_values[command]) {
      if (subs[command]->count("--" + key) > 0) config.set(key, value);
    }
    for (const auto& o : overrides) config.set(o);
    if (!out_dir.empty()) config.set("out", out_dir);
    return specasym::run_guarded(command, config, std::cout, std::cerr);
  } catch (const specasym::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return specasym::kExitBadConfig;
  }
}
