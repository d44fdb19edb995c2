#include <sstream>

#include "doctest.h"
#include "iel/suite.hpp"

TEST_CASE("bundled suite passes") {
  const iel::SuiteReport report = iel::run_paper_suite();
  CHECK(report.entries.size() > 100);
  for (const iel::SuiteEntry& e : report.entries) {
    INFO(e.name << ": expected " << e.expected << ", observed " << e.observed);
    CHECK(e.pass);
  }
  CHECK(report.ok());
}

TEST_CASE("suite report formats") {
  const iel::SuiteReport report = iel::run_paper_suite();
  std::istringstream tsv(iel::render_suite_tsv(report));
  std::string line;
  std::size_t rows = 0;
  while (std::getline(tsv, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), '\t') == 3);
    CHECK((line.ends_with("\tPASS") || line.ends_with("\tFAIL")));
  }
  CHECK(rows == report.entries.size());
  CHECK(iel::render_suite_table(report).find(report.entries.front().name) != std::string::npos);
}
