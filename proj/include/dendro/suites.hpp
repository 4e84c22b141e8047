#pragma once

#include <string>
#include <vector>

#include "dendro/finop.hpp"

namespace dendro {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool aborted = false;
  std::string abort_reason;

  bool pass() const {
    if (aborted) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string render_text() const;
  std::string render_json() const;
};

struct SuiteBounds {
  double time_budget_s = 120.0;
  int max_vertices = 3;
  int max_arity = 2;
  int max_columns = 3;
  int mirror_vertices = 6;
  int mirror_arity = 3;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds = {});

// the operad corpus bundled with the acceptance suites
std::vector<std::pair<std::string, FinOperad>> bundled_operads(Flavour f);

}  // namespace dendro
