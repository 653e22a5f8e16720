#pragma once

#include <string>
#include <vector>

namespace taucert::accept {

struct CriterionResult {
  int id = 0;
  std::string tag;  // matched by --filter
  std::string title;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

struct Criterion {
  int id;
  std::string tag;
  std::string title;
  double budget_seconds;
};

const std::vector<Criterion>& criteria();

/// Runs every criterion whose tag or title contains `filter` (a number selects by id; all when empty), concurrently.
/// A criterion fails when its check fails, throws, or exceeds its time budget.
std::vector<CriterionResult> run(const std::string& filter = "", bool parallel = true);

/// One line per criterion plus a summary line.
std::string format_table(const std::vector<CriterionResult>& results);

}  // namespace taucert::accept
