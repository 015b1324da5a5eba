#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "specasym/cli/config.hpp"
#include "specasym/core/spectrum.hpp"

namespace specasym {

enum ExitCode : int {
  kExitOk = 0,
  kExitBadConfig = 2,
  kExitConvergence = 3,
  kExitAcceptance = 4,
};

const std::vector<std::string>& command_names();

// Runs one subcommand; writes its artifacts under output_directory(config)
// and a JSON summary to `out`. Exceptions propagate.
int run_command(const std::string& name, const ExperimentConfig& config, std::ostream& out);

// Same, mapping ValidationError to 2 and ConvergenceError /
// UntrustedRangeError to 3, with the message on `err`.
int run_guarded(const std::string& name, const ExperimentConfig& config, std::ostream& out,
                std::ostream& err);

// Spectrum CSV: '#'-comment header lines (config hash, label, reliability
// cutoff) followed by "index,eigenvalue,convergence".
void write_spectrum_csv(std::ostream& out, const Spectrum& s, const std::string& config_hash);
Spectrum read_spectrum_csv(const std::string& path);

}  // namespace specasym
