// Runs every acceptance criterion at full level and prints one line per result.

#include <iostream>

#include "mmes/validation.hpp"

int main() {
  mmes::ValidationOptions options;
  options.level = mmes::Level::full;
  int failures = 0;
  for (int id = 1; id <= mmes::kCriterionCount; ++id) {
    mmes::CheckResult r;
    try {
      r = mmes::run_criterion(id, options);
    } catch (const std::exception& e) {
      r.id = id;
      r.title = "error";
      r.details.push_back(e.what());
    }
    std::cout << mmes::format_result(r) << std::flush;
    if (!r.passed) ++failures;
  }
  std::cout << (mmes::kCriterionCount - failures) << "/" << mmes::kCriterionCount << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
