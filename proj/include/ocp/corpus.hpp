#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ocp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0: no time limit
};

// Criteria are numbered 1..8.
int criterion_count();
CriterionResult run_criterion(int id, std::uint64_t seed = 1);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1);

// One `PASS|FAIL <id> <name> (<seconds>s) <detail>` line per result.
std::string criterion_line(const CriterionResult& r);
std::string corpus_table(const std::vector<CriterionResult>& results);

}  // namespace ocp
