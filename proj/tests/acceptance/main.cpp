#include <iostream>
#include <string>

#include "specasym/cli/acceptance.hpp"

// Usage: acceptance [id ...]; runs every criterion when no id is given.
int main(int argc, char** argv) {
  specasym::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::stoi(argv[i]));
  options.log = &std::cerr;
  const specasym::AcceptanceReport report = specasym::run_acceptance(options);
  specasym::print_report(std::cout, report);
  return report.all_pass() ? 0 : 1;
}
