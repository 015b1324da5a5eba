#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specasym {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::string> info;
  double seconds = 0.0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
};

struct AcceptanceOptions {
  // Subset of criterion ids to run; empty runs all.
  std::vector<int> only;
  // Progress and per-criterion lines go here (may be null).
  std::ostream* log = nullptr;
};

// Runs the acceptance criteria; every tolerance is pinned in the
// implementation. One result per criterion, in order.
AcceptanceReport run_acceptance(const AcceptanceOptions& options = {});

// "[PASS] C1 name: detail" lines followed by indented info lines.
void print_report(std::ostream& out, const AcceptanceReport& report);

}  // namespace specasym
