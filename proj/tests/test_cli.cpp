#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mmes/figures.hpp"
#include "mmes/nonlocality.hpp"
#include "mmes/records.hpp"
#include "mmes/sweep.hpp"
#include "mmes/validation.hpp"

using namespace mmes;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("mmes_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(MMES_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Rows of a CSV file, skipping the header and "#" summary lines.
std::vector<std::vector<std::string>> csv_rows(const fs::path& path) {
  std::vector<std::vector<std::string>> out;
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    out.push_back(cells);
  }
  return out;
}

SweepSpec point_spec(const fs::path& out) {
  SweepSpec spec;
  spec.family = Family::dim4;
  spec.p_values = {0.0};
  spec.kt_min = 0.0;
  spec.kt_max = 0.0;
  spec.kt_step = 0.1;
  spec.measures = {Measure::negativity};
  spec.output_path = out.string();
  return spec;
}

}  // namespace

TEST(Records, NumberFormatting) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(NAN), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
  EXPECT_DOUBLE_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Records, CsvAndJsonLayouts) {
  Table t;
  t.columns = {"a", "b"};
  t.add_row({1.0, std::string("x")});
  t.summary.push_back({"family", "dim4"});
  EXPECT_EQ(to_csv(t), "a,b\n1,x\n# family=dim4\n");
  const auto j = nlohmann::json::parse(to_json(t));
  EXPECT_EQ(j["columns"][1], "b");
  EXPECT_EQ(j["rows"][0]["a"], 1.0);
  EXPECT_EQ(j["rows"][0]["b"], "x");
  EXPECT_EQ(j["summary"]["family"], "dim4");
  EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
  EXPECT_THROW(write_text("/proc/mmes_forbidden/x.csv", "x"), IoError);
}

TEST(Sweep, SinglePointAtTimeZero) {
  const fs::path dir = scratch_dir("point");
  run_sweep(point_spec(dir / "n.csv"));
  const auto rows = csv_rows(dir / "n.csv");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0][2], "negativity");
  EXPECT_NEAR(std::stod(rows[0][3]), 0.5, 1e-12);
  EXPECT_NEAR(std::stod(rows[0][4]), 0.5, 1e-12);
}

TEST(Sweep, RejectsInvalidSpecifications) {
  const fs::path out = scratch_dir("invalid") / "x.csv";
  auto bad = [&](auto mutate) {
    SweepSpec s = point_spec(out);
    mutate(s);
    return s;
  };
  EXPECT_THROW(bad([](SweepSpec& s) { s.p_values = {1.5}; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](SweepSpec& s) { s.p_values.clear(); }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](SweepSpec& s) { s.kt_step = 0.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](SweepSpec& s) { s.kt_min = 2.0; s.kt_max = 1.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](SweepSpec& s) { s.kt_min = -1.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](SweepSpec& s) { s.measures.clear(); }).validate(), std::invalid_argument);
  EXPECT_THROW(measure_from_string("concurrence"), std::invalid_argument);
  EXPECT_THROW(format_from_string("xml"), std::invalid_argument);
}

TEST(Sweep, ClosedFormsAgreeAndOutputIsDeterministic) {
  const fs::path dir = scratch_dir("det");
  SweepSpec spec = point_spec(dir / "a.json");
  spec.p_values = {0.0, 0.35, 1.0};
  spec.kt_max = 2.0;
  spec.kt_step = 0.25;
  spec.measures = {Measure::negativity, Measure::min, Measure::m_indicator, Measure::m_prime, Measure::esd_line,
                   Measure::pt_spectrum};
  spec.format = Format::json;
  run_sweep(spec);
  spec.output_path = (dir / "b.json").string();
  run_sweep(spec);
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
  const auto j = nlohmann::json::parse(slurp(dir / "a.json"));
  EXPECT_EQ(j["rows"].size(), 3u * 9u * 6u);
  EXPECT_LT(std::stod(j["summary"]["max_abs_diff"].get<std::string>()), 1e-10);
}

TEST(Sweep, HigherFamiliesHaveClosedFormsOnlyWhereAvailable) {
  const fs::path dir = scratch_dir("dim6");
  SweepSpec spec = point_spec(dir / "s.csv");
  spec.family = Family::dim6;
  spec.p_values = {0.8};
  spec.kt_max = 1.0;
  spec.kt_step = 0.5;
  spec.measures = {Measure::negativity, Measure::min, Measure::m_prime};
  const Table t = sweep_table(spec);
  ASSERT_EQ(t.rows.size(), 9u);
  for (const auto& row : t.rows) {
    const double closed = std::get<double>(row[4]);
    if (std::get<std::string>(row[2]) == "m_prime")
      EXPECT_TRUE(std::isnan(closed));
    else
      EXPECT_LT(std::get<double>(row[5]), 1e-10);
  }
}

TEST(Figures, PanelsCarryExpectedValues) {
  const fs::path dir = scratch_dir("figs");
  run_figure(FigureId::fig3, dir);
  for (const auto& row : csv_rows(dir / "fig3_d.csv")) {
    if (std::stod(row[0]) < 5.0) EXPECT_GT(std::stod(row[1]), 0.0);
  }
  run_figure(FigureId::fig4, dir);
  for (const auto& row : csv_rows(dir / "fig4_d.csv")) EXPECT_NEAR(std::stod(row.back()), 0.0, 1e-10);
  const auto seven = run_figure(FigureId::fig7, dir);
  ASSERT_EQ(seven.size(), 2u);
  for (const auto& p : seven) EXPECT_TRUE(fs::exists(p));
  EXPECT_THROW(figure_from_string("fig8"), std::invalid_argument);
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch_dir("cli");
  EXPECT_EQ(run_cli("esd --family dim6 --p 0.05"), 0);
  EXPECT_EQ(run_cli("sweep --p 0.2 --kt-max 1 --kt-step 0.5 --out " + (dir / "s.csv").string()), 0);
  EXPECT_TRUE(fs::exists(dir / "s.csv"));
  EXPECT_EQ(run_cli("sweep --p 1.4 --out " + (dir / "bad.csv").string()), 2);
  EXPECT_EQ(run_cli("sweep --p 0.2 --measures nope --out " + (dir / "bad.csv").string()), 2);
  EXPECT_EQ(run_cli("sweep --kt-step abc --out " + (dir / "bad.csv").string()), 2);
  EXPECT_EQ(run_cli("sweep --p 0.2 --out /proc/mmes_forbidden/s.csv"), 3);
  EXPECT_EQ(run_cli("figure fig9 --out " + dir.string()), 2);
  EXPECT_EQ(run_cli("bogus"), 2);
  EXPECT_EQ(run_cli("validate --level fast --criterion 1"), 0);
  EXPECT_EQ(run_cli("validate --level fast --criterion 11"), 2);
}

TEST(Cli, ConfigFileSuppliesFlags) {
  const fs::path dir = scratch_dir("config");
  const fs::path out = dir / "c.csv";
  {
    std::ofstream cfg(dir / "run.ini");
    cfg << "[sweep]\nfamily=dim6\np=0.8\nkt-max=0.5\nkt-step=0.5\nmeasures=min\nout=" << out.string() << "\n";
  }
  ASSERT_EQ(run_cli("--config " + (dir / "run.ini").string() + " sweep"), 0);
  const auto rows = csv_rows(out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "0.80000000000000004");
  EXPECT_EQ(rows[0][2], "min");
  EXPECT_NE(slurp(out).find("# family=dim6"), std::string::npos);
}

TEST(Validation, PerturbedClosedFormIsCaught) {
  ValidationOptions options;
  options.level = Level::fast;
  EXPECT_TRUE(run_criterion(3, options).passed);
  options.min_c1c2_dim4 = [](double p, const ChannelParams& c) {
    return min_closed_form(MinFamily::c1c2_dim4, p, c) * (1.0 + 1e-6);
  };
  const CheckResult r = run_criterion(3, options);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.id, 3);
  EXPECT_NE(format_result(r).find("[FAIL]"), std::string::npos);
  EXPECT_THROW(run_criterion(0), std::invalid_argument);
}
