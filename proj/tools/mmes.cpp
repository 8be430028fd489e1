// mmes: figure datasets, parameter sweeps, validation and ESD lookups.
//
// Exit codes: 0 success, 1 validation failure, 2 bad arguments, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmes/entanglement.hpp"
#include "mmes/figures.hpp"
#include "mmes/records.hpp"
#include "mmes/sweep.hpp"
#include "mmes/validation.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitArgs = 2;
constexpr int kExitIo = 3;

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t end = std::min(item.find(',', start), item.size());
      if (end > start) out.push_back(item.substr(start, end - start));
      start = end + 1;
    }
  }
  return out;
}

double parse_double(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw std::invalid_argument(std::string(what) + ": not a number: '" + text + "'");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed maximally entangled states in cavity-reservoir dissipation"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring the command-line flags (flags take precedence)");

  std::string figure_id, figure_out;
  auto* figure = app.add_subcommand("figure", "write the CSV datasets of one figure");
  figure->add_option("id", figure_id, "fig1 .. fig7")->required();
  figure->add_option("--out", figure_out, "output directory")->required();

  std::string sweep_family = "dim4", sweep_format = "csv", sweep_out;
  std::vector<std::string> sweep_p{"0"}, sweep_measures{"negativity"};
  double kt_min = 0.0, kt_max = 6.0, kt_step = 0.02;
  auto* sweep = app.add_subcommand("sweep", "evaluate measures over a (p, kappa_t) grid");
  sweep->add_option("--family", sweep_family, "dim4, dim6 or dim8")->capture_default_str();
  sweep->add_option("--p", sweep_p, "comma-separated probabilities")->delimiter(',');
  sweep->add_option("--kt-min", kt_min)->capture_default_str();
  sweep->add_option("--kt-max", kt_max)->capture_default_str();
  sweep->add_option("--kt-step", kt_step)->capture_default_str();
  sweep->add_option("--measures", sweep_measures,
                    "comma-separated subset of negativity, min, m_indicator, m_prime, esd_line, pt_spectrum")
      ->delimiter(',');
  sweep->add_option("--format", sweep_format, "csv or json")->capture_default_str();
  sweep->add_option("--out", sweep_out, "output file")->required();

  std::string level = "fast";
  std::optional<int> only;
  auto* validate = app.add_subcommand("validate", "run the acceptance checks");
  validate->add_option("--level", level, "fast or full")->capture_default_str();
  validate->add_option("--criterion", only, "run a single criterion (1-10)");

  std::string esd_family = "dim4";
  double esd_p = 0.0;
  auto* esd = app.add_subcommand("esd", "print the entanglement sudden death time of the two cavities");
  esd->add_option("--family", esd_family, "dim4, dim6 or dim8")->capture_default_str();
  esd->add_option("--p", esd_p, "mixing probability")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitArgs;
  }

  try {
    if (*figure) {
      for (const auto& path : mmes::run_figure(mmes::figure_from_string(figure_id), figure_out))
        std::cout << path.string() << '\n';
      return 0;
    }
    if (*sweep) {
      mmes::SweepSpec spec;
      spec.family = mmes::family_from_string(sweep_family);
      spec.p_values.clear();
      for (const auto& s : split_list(sweep_p)) spec.p_values.push_back(parse_double(s, "--p"));
      spec.kt_min = kt_min;
      spec.kt_max = kt_max;
      spec.kt_step = kt_step;
      for (const auto& s : split_list(sweep_measures)) spec.measures.push_back(mmes::measure_from_string(s));
      spec.format = mmes::format_from_string(sweep_format);
      spec.output_path = sweep_out;
      mmes::run_sweep(spec);
      std::cout << sweep_out << '\n';
      return 0;
    }
    if (*validate) {
      mmes::ValidationOptions options;
      options.level = mmes::level_from_string(level);
      std::vector<mmes::CheckResult> results;
      if (only)
        results.push_back(mmes::run_criterion(*only, options));
      else
        results = mmes::run_acceptance(options);
      bool all = true;
      for (const auto& r : results) {
        std::cout << mmes::format_result(r);
        all = all && r.passed;
      }
      std::cout << (all ? "all checks passed\n" : "some checks FAILED\n");
      return all ? 0 : kExitValidation;
    }
    if (*esd) {
      const mmes::Family family = mmes::family_from_string(esd_family);
      const double t = mmes::esd_boundary(family, esd_p);
      std::cout << "family=" << mmes::to_string(family) << " p=" << mmes::format_number(esd_p)
                << " esd_kappa_t=" << mmes::format_number(t) << '\n';
      return 0;
    }
  } catch (const mmes::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitArgs;
}
