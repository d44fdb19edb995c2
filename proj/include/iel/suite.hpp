#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace iel {

struct SuiteEntry {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;

  std::size_t passed() const;
  std::size_t failed() const { return entries.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

// Every bundled claim: model verdicts, theorem and non-theorem decisions,
// Hilbert library checks, hierarchy separations, translations. Deterministic.
SuiteReport run_paper_suite();

std::string render_suite_table(const SuiteReport& report);
// name<TAB>expected<TAB>observed<TAB>PASS|FAIL per line.
std::string render_suite_tsv(const SuiteReport& report);

}  // namespace iel
