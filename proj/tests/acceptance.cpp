// Acceptance battery: one line per criterion, nonzero exit on any failure.
#include <cstring>
#include <iostream>

#include "fullerene/verify.hpp"

int main(int argc, char** argv) {
  bool timings = true;
  int jobs = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--no-timings") == 0) timings = false;
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
      jobs = std::atoi(argv[++i]);
  }
  auto results = fullerene::verify::run_all_criteria(jobs);
  fullerene::verify::print_report(std::cout, results, timings);
  return fullerene::verify::failed_count(results) == 0 ? 0 : 1;
}
