// Acceptance suite: one PASS/FAIL line per criterion.

#include <cstdio>

#include "gonseq/selfcheck.hpp"

int main() {
  gonseq::SelfcheckOptions options;
  options.golden_path = std::string(GONSEQ_GOLDEN_DIR) + "/table1_printed.md";

  bool all = true;
  for (const gonseq::CriterionResult& c : gonseq::run_selfcheck(options)) {
    all = all && c.passed;
    std::printf("%s criterion %2d: %s (%lld checks, %.3f ms", c.passed ? "PASS" : "FAIL", c.id,
                c.name.c_str(), static_cast<long long>(c.checks), c.millis);
    if (c.budget_ms > 0) std::printf(", budget %.0f ms", c.budget_ms);
    std::printf(")");
    if (!c.detail.empty()) std::printf(": %s", c.detail.c_str());
    std::printf("\n");
  }
  return all ? 0 : 1;
}
