#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fullerene::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // failure explanation or key numbers
  double seconds = 0;
};

// Runs the full acceptance battery (deterministic). `jobs` feeds the
// parallel subset sweeps; results are identical for any job count.
std::vector<CriterionResult> run_all_criteria(int jobs = 1);

// One line per criterion; timings suppressed when with_timings is false.
void print_report(std::ostream& os, const std::vector<CriterionResult>& rs,
                  bool with_timings);

int failed_count(const std::vector<CriterionResult>& rs);

}  // namespace fullerene::verify
