// Runs the acceptance criteria and prints one verdict line per criterion.
// Usage: acceptance [--serial] [--verbose] [criterion numbers...]

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <vector>

#include "whk/suite.hpp"

int main(int argc, char** argv) {
  whk::Exec exec = whk::Exec::parallel;
  bool verbose = false;
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--serial") == 0) {
      exec = whk::Exec::serial;
    } else if (std::strcmp(argv[i], "--verbose") == 0) {
      verbose = true;
    } else {
      which.push_back(std::atoi(argv[i]));
    }
  }
  if (which.empty()) {
    for (int k = 1; k <= whk::criterion_count; ++k) which.push_back(k);
  }

  int failed = 0;
  for (int k : which) {
    whk::Criterion c{k, "", whk::Report{}, 0.0};
    bool pass = false;
    std::string error;
    try {
      c = whk::run_criterion(k, exec);
      pass = c.report.passed();
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (!pass) ++failed;
    std::cout << "criterion " << std::setw(2) << k << ": " << (pass ? "PASS" : "FAIL") << "  "
              << c.title << " (" << c.report.checks().size() << " checks, " << std::fixed
              << std::setprecision(2) << c.seconds << " s)\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    for (const auto& id : c.report.failures()) std::cout << "    failed: " << id << "\n";
    if (verbose) {
      for (const auto& [key, v] : c.report.notes()) std::cout << "    " << key << " = " << v << "\n";
    }
  }
  std::cout << (which.size() - failed) << "/" << which.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
