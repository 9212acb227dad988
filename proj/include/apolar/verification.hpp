#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apolar {

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  /// Fault injection: evaluate table entries with the naive m_r bound.
  bool naive_m_r = false;
};

struct CheckRow {
  int criterion = 0;
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct CriterionSummary {
  int criterion = 0;
  std::string title;
  int rows = 0;
  int failed = 0;
  bool passed() const { return failed == 0; }
};

inline constexpr int kCriterionCount = 13;

std::string criterion_title(int criterion);

std::vector<CheckRow> run_paper_suite(const SuiteOptions& options = {});
/// Only the rows of one criterion.
std::vector<CheckRow> run_criterion(int criterion, const SuiteOptions& options = {});

std::vector<CriterionSummary> summarize(const std::vector<CheckRow>& rows);

}  // namespace apolar
