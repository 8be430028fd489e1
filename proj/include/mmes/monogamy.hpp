#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mmes/dynamics.hpp"

namespace mmes {

enum class Pair { c1c2, c1r2, r1c2, r1r2 };

inline constexpr std::array<Pair, 4> kPairs{Pair::c1c2, Pair::c1r2, Pair::r1c2, Pair::r1r2};

std::string_view to_string(Pair pair);
// Mode positions (qubit mode first) inside the four-partite state.
std::array<std::size_t, 2> pair_modes(Pair pair);

struct PairValues {
  double negativity = 0.0;
  double min = 0.0;
};

struct DistributionPanel {
  Family family = Family::dim4;
  double p = 0.0;
  double kappa_t = 0.0;
  std::array<PairValues, 4> pairwise{};  // indexed like kPairs
  double global_negativity = 0.5;
  double global_min = 0.0;
  double m_indicator = 0.0;
  double m_prime_indicator = 0.0;

  const PairValues& at(Pair pair) const { return pairwise[static_cast<std::size_t>(pair)]; }
  // MIN^2 across the global cut minus the pairwise MIN^2.
  double squared_min_indicator() const;
};

// Every pairwise value from the numerically evolved four-partite state. The
// global MIN is computed numerically; the global negativity is the constant
// 0.5 of the initial state (see global_negativity for the numerical value).
DistributionPanel distribution_panel(Family family, double p, double kappa_t);

// Numerical negativity across c1 r1 | c2 r2.
double global_negativity(Family family, double p, double kappa_t);
// Numerical MIN across c1 r1 | c2 r2.
double global_min(Family family, double p, double kappa_t);

double negativity_monogamy(double p, double kappa_t, Family family);
// Same indicator assembled from the closed-form 2x4 spectra (dim4 only).
double negativity_monogamy_closed(double p, double kappa_t);

double min_distribution(double p, double kappa_t, Family family);
// Closed form of the MIN indicator; only the 2x4 family has one.
double min_distribution_closed(double p, double kappa_t, Family family = Family::dim4);

struct Grid {
  std::vector<double> p;
  std::vector<double> kappa_t;

  std::size_t size() const { return p.size() * kappa_t.size(); }

  // p in 0..1 step 0.01, kappa_t in 0..6 step 0.02 plus 8, 10, 15, 20.
  static Grid default_scan();
  // p in 0..1 step 0.1, kappa_t in 0..6 step 0.2 plus 10, 20.
  static Grid coarse_scan();
};

// n + 1 evenly spaced points from lo to hi, with the endpoints exact.
std::vector<double> linspace(double lo, double hi, std::size_t n);
// lo, lo + step, ... up to hi inclusive (within step / 1e6).
std::vector<double> arange(double lo, double hi, double step);

struct ScanReport {
  double min_value = 0.0;
  double p_at = 0.0;
  double kappa_t_at = 0.0;
  std::size_t points = 0;
};

ScanReport squared_min_scan(Family family, std::span<const double> p_grid, std::span<const double> kt_grid);
ScanReport negativity_monogamy_scan(Family family, std::span<const double> p_grid, std::span<const double> kt_grid);

enum class PeakMeasure { negativity, min };

// Strict interior local maxima after merging runs of equal values (1e-12).
int count_peaks(std::span<const double> values);

// Peaks of the c1 r2 curve of the 2x4 family on kappa_t in [0, 10], spacing
// 1e-3, with values below 1e-12 clamped to 0.
int peak_census(PeakMeasure measure, double p);

// Largest |MIN_c1r2 - MIN_r1c2| over the 2x4 figure grid.
double pair_curve_gap(double p);

// First kappa_t at which N_r1r2 exceeds 1e-10, from a 0.02 grid refined by
// bisection to 1e-8; +infinity if it never does by kappa_t = 20.
double esb_time(double p, Family family = Family::dim4);

}  // namespace mmes
