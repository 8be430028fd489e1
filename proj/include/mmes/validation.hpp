#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mmes/dynamics.hpp"

namespace mmes {

enum class Level { fast, full };

std::string_view to_string(Level level);
Level level_from_string(std::string_view name);

struct ValidationOptions {
  Level level = Level::full;
  // Closed-form two-cavity MIN of the 2x4 family under test; defaults to
  // min_closed_form(MinFamily::c1c2_dim4, ...). Replaceable so that a
  // perturbed formula can be shown to fail.
  ClosedFormMeasure min_c1c2_dim4;
};

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

CheckResult run_criterion(int id, const ValidationOptions& options = {});
std::vector<CheckResult> run_acceptance(const ValidationOptions& options = {});

// One status line followed by indented detail lines.
std::string format_result(const CheckResult& result);

}  // namespace mmes
