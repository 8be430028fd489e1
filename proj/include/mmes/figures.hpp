#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

namespace mmes {

enum class FigureId { fig1, fig2, fig3, fig4, fig5, fig6, fig7 };

std::string_view to_string(FigureId id);
FigureId figure_from_string(std::string_view name);

// Writes the CSV files of one figure into out_dir and returns their paths.
//
//   fig1  fig1_negativity.csv (p, kappa_t, negativity) and fig1_esd_line.csv
//   fig2  fig2_min.csv (p, kappa_t, min) and fig2_asymmetry.csv
//   fig3  fig3_{a,b,c,d}.csv pairwise negativities and M at p = 0, 0.5, 0.75, 1
//   fig4  fig4_{a,b,c,d}.csv pairwise MIN and M' at the same p
//   fig5  fig5_regions.csv and fig5_lines.csv
//   fig6  fig6_boundary.csv (ESD time vs p) and fig6_line.csv (p vs kappa_t)
//   fig7  fig7_{dim6,dim8}.csv pairwise MIN and M' at p = 0.8
std::vector<std::filesystem::path> run_figure(FigureId id, const std::filesystem::path& out_dir);

}  // namespace mmes
