#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gonseq/checked.hpp"

namespace gonseq {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  Int checks;      // individual assertions evaluated
  double millis;   // wall time of the criterion
  double budget_ms; // 0 when the criterion has no time budget
  std::string detail;
};

struct SelfcheckOptions {
  std::string golden_path;          // committed markdown reproduction of the table
  std::uint64_t seed = 0x5eed2026;  // random ledger seeds
  Int random_ledgers = 10000;
  Int injected_contradictions = 1000;
};

/// Runs the full acceptance suite: one result per criterion, in order.
std::vector<CriterionResult> run_selfcheck(const SelfcheckOptions& options);

} // namespace gonseq
