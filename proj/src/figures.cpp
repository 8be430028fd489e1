#include "mmes/figures.hpp"

#include <stdexcept>
#include <string>

#include "mmes/entanglement.hpp"
#include "mmes/monogamy.hpp"
#include "mmes/nonlocality.hpp"
#include "mmes/parallel.hpp"
#include "mmes/records.hpp"

namespace mmes {

namespace {

using Path = std::filesystem::path;

std::vector<double> main_kt_grid() { return linspace(0.0, 6.0, 300); }
std::vector<double> short_kt_grid() { return linspace(0.0, 3.0, 300); }

// Evaluates row(i) for every i in parallel and appends the rows in order.
void fill(Table& table, std::size_t n, const std::function<std::vector<Cell>(std::size_t)>& row) {
  std::vector<std::vector<Cell>> rows(n);
  parallel_for(n, [&](std::size_t i) { rows[i] = row(i); });
  for (auto& r : rows) table.add_row(std::move(r));
}

Path emit(const Path& dir, const std::string& name, const Table& table) {
  const Path path = dir / name;
  write_csv(path, table);
  return path;
}

double c1c2_value(double p, double kt, bool min) {
  const DensityMatrix rho = evolve_ensemble(MmesSpec::for_family(Family::dim4, p), kt).reduce(pair_modes(Pair::c1c2));
  const std::size_t side_a[] = {0};
  return min ? min_luo_fu(rho) : negativity(rho, side_a);
}

std::vector<Path> surface_figure(const Path& dir, const std::string& name, bool min) {
  const auto ps = linspace(0.0, 1.0, 100);
  const auto kts = main_kt_grid();
  Table t;
  t.columns = {"p", "kappa_t", min ? "min" : "negativity"};
  fill(t, ps.size() * kts.size(), [&](std::size_t i) -> std::vector<Cell> {
    const double p = ps[i / kts.size()], kt = kts[i % kts.size()];
    return {p, kt, c1c2_value(p, kt, min)};
  });
  return {emit(dir, name, t)};
}

std::vector<Path> fig1(const Path& dir) {
  auto out = surface_figure(dir, "fig1_negativity.csv", false);
  const auto ps = linspace(0.0, 0.99, 99);
  Table t;
  t.columns = {"p", "esd_time", "esd_time_numerical", "line_p_at_esd_time"};
  fill(t, ps.size(), [&](std::size_t i) -> std::vector<Cell> {
    const double p = ps[i];
    const double esd = esd_boundary(Family::dim4, p);
    return {p, esd, esd_time_numerical(Family::dim4, p), esd_line_p(Family::dim4, esd)};
  });
  out.push_back(emit(dir, "fig1_esd_line.csv", t));
  return out;
}

std::vector<Path> fig2(const Path& dir) {
  auto out = surface_figure(dir, "fig2_min.csv", true);
  const auto kts = main_kt_grid();
  Table t;
  t.columns = {"kappa_t", "min_p0", "min_p1", "asymmetry"};
  fill(t, kts.size(), [&](std::size_t i) -> std::vector<Cell> {
    const double a = c1c2_value(0.0, kts[i], true), b = c1c2_value(1.0, kts[i], true);
    return {kts[i], a, b, b - a};
  });
  out.push_back(emit(dir, "fig2_asymmetry.csv", t));
  return out;
}

std::vector<Path> panel_figure(const Path& dir, const std::string& prefix, bool min) {
  const double panel_p[] = {0.0, 0.5, 0.75, 1.0};
  const char* panel_name[] = {"a", "b", "c", "d"};
  const auto kts = main_kt_grid();
  std::vector<Path> out;
  for (std::size_t k = 0; k < 4; ++k) {
    Table t;
    t.columns = {"kappa_t"};
    for (Pair pair : kPairs) t.columns.push_back(std::string(min ? "min_" : "n_") + std::string(to_string(pair)));
    t.columns.push_back(min ? "m_prime" : "m_indicator");
    const double p = panel_p[k];
    fill(t, kts.size(), [&](std::size_t i) -> std::vector<Cell> {
      const DistributionPanel panel = distribution_panel(Family::dim4, p, kts[i]);
      std::vector<Cell> row{kts[i]};
      for (Pair pair : kPairs) row.emplace_back(min ? panel.at(pair).min : panel.at(pair).negativity);
      row.emplace_back(min ? panel.m_prime_indicator : panel.m_indicator);
      return row;
    });
    out.push_back(emit(dir, prefix + "_" + panel_name[k] + ".csv", t));
  }
  return out;
}

std::vector<Path> fig5(const Path& dir) {
  const auto ps = linspace(0.0, 1.0, 199);
  const auto kts = linspace(0.0, 3.0, 199);
  Table t;
  t.columns = {"p", "kappa_t", "region", "lambda3", "lambda5", "lambda7", "negativity"};
  fill(t, ps.size() * kts.size(), [&](std::size_t i) -> std::vector<Cell> {
    const double p = ps[i / kts.size()], kt = kts[i % kts.size()];
    const auto l = pt_eigenvalues_c1c2_closed(p, damping_amplitudes(kt));
    return {p, kt, to_string(esd_region_classifier(p, kt)), l[2], l[4], l[6], c1c2_value(p, kt, false)};
  });
  std::vector<Path> out{emit(dir, "fig5_regions.csv", t)};

  const auto line_kts = linspace(0.01, 3.0, 299);
  Table lines;
  lines.columns = {"kappa_t", "lambda3_line_p", "esd_line_p", "lambda5_time"};
  for (double kt : line_kts)
    lines.add_row({kt, lambda3_zero_line_p(kt), esd_line_p(Family::dim4, kt), lambda5_zero_time()});
  out.push_back(emit(dir, "fig5_lines.csv", lines));
  return out;
}

std::vector<Path> fig6(const Path& dir) {
  const auto ps = linspace(0.0, 0.99, 99);
  Table boundary;
  boundary.columns = {"p", "dim6_esd_time", "dim8_esd_time"};
  fill(boundary, ps.size(), [&](std::size_t i) -> std::vector<Cell> {
    return {ps[i], esd_boundary(Family::dim6, ps[i]), esd_boundary(Family::dim8, ps[i])};
  });
  const auto six = EsdCase::of(Family::dim6), eight = EsdCase::of(Family::dim8);
  boundary.summary = {{"dim6_threshold_p", format_number(*six.threshold_p)},
                      {"dim6_plateau_time", format_number(*six.plateau_time)},
                      {"dim8_threshold_p", format_number(*eight.threshold_p)},
                      {"dim8_plateau_time", format_number(*eight.plateau_time)}};
  std::vector<Path> out{emit(dir, "fig6_boundary.csv", boundary)};

  Table line;
  line.columns = {"kappa_t", "dim6_line_p", "dim8_line_p"};
  for (double kt : linspace(0.01, 3.0, 299))
    line.add_row({kt, esd_line_p(Family::dim6, kt), esd_line_p(Family::dim8, kt)});
  out.push_back(emit(dir, "fig6_line.csv", line));
  return out;
}

std::vector<Path> fig7(const Path& dir) {
  const auto kts = short_kt_grid();
  std::vector<Path> out;
  for (Family family : {Family::dim6, Family::dim8}) {
    Table t;
    t.columns = {"kappa_t"};
    for (Pair pair : kPairs) t.columns.push_back("min_" + std::string(to_string(pair)));
    t.columns.insert(t.columns.end(), {"min_global", "m_prime"});
    fill(t, kts.size(), [&](std::size_t i) -> std::vector<Cell> {
      const DistributionPanel panel = distribution_panel(family, 0.8, kts[i]);
      std::vector<Cell> row{kts[i]};
      for (Pair pair : kPairs) row.emplace_back(panel.at(pair).min);
      row.emplace_back(panel.global_min);
      row.emplace_back(panel.m_prime_indicator);
      return row;
    });
    out.push_back(emit(dir, "fig7_" + std::string(to_string(family)) + ".csv", t));
  }
  return out;
}

}  // namespace

std::string_view to_string(FigureId id) {
  constexpr std::string_view names[] = {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
  return names[static_cast<std::size_t>(id)];
}

FigureId figure_from_string(std::string_view name) {
  for (auto id : {FigureId::fig1, FigureId::fig2, FigureId::fig3, FigureId::fig4, FigureId::fig5, FigureId::fig6,
                  FigureId::fig7})
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown figure id '" + std::string(name) + "' (expected fig1 .. fig7)");
}

std::vector<std::filesystem::path> run_figure(FigureId id, const std::filesystem::path& out_dir) {
  switch (id) {
    case FigureId::fig1: return fig1(out_dir);
    case FigureId::fig2: return fig2(out_dir);
    case FigureId::fig3: return panel_figure(out_dir, "fig3", false);
    case FigureId::fig4: return panel_figure(out_dir, "fig4", true);
    case FigureId::fig5: return fig5(out_dir);
    case FigureId::fig6: return fig6(out_dir);
    case FigureId::fig7: return fig7(out_dir);
  }
  throw std::invalid_argument("run_figure: unknown figure");
}

}  // namespace mmes
