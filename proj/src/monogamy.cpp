#include "mmes/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mmes/entanglement.hpp"
#include "mmes/nonlocality.hpp"
#include "mmes/parallel.hpp"

namespace mmes {

namespace {

const std::size_t kGlobalSide[] = {kC1, kR1};

double pair_negativity(const PureEnsemble& ens, Pair pair) {
  const auto modes = pair_modes(pair);
  const std::size_t side_a[] = {0};
  return negativity(ens.reduce(modes), side_a);
}

ScanReport scan(std::span<const double> p_grid, std::span<const double> kt_grid,
                const std::function<double(double, double)>& indicator) {
  if (p_grid.empty() || kt_grid.empty()) throw std::invalid_argument("scan: grids must be nonempty");
  std::vector<double> values(p_grid.size() * kt_grid.size());
  parallel_for(values.size(), [&](std::size_t i) {
    values[i] = indicator(p_grid[i / kt_grid.size()], kt_grid[i % kt_grid.size()]);
  });
  const auto it = std::min_element(values.begin(), values.end());
  const std::size_t i = static_cast<std::size_t>(it - values.begin());
  return {*it, p_grid[i / kt_grid.size()], kt_grid[i % kt_grid.size()], values.size()};
}

}  // namespace

std::string_view to_string(Pair pair) {
  switch (pair) {
    case Pair::c1c2: return "c1c2";
    case Pair::c1r2: return "c1r2";
    case Pair::r1c2: return "r1c2";
    case Pair::r1r2: return "r1r2";
  }
  return "unknown";
}

std::array<std::size_t, 2> pair_modes(Pair pair) {
  switch (pair) {
    case Pair::c1c2: return {kC1, kC2};
    case Pair::c1r2: return {kC1, kR2};
    case Pair::r1c2: return {kR1, kC2};
    case Pair::r1r2: return {kR1, kR2};
  }
  throw std::invalid_argument("pair_modes: unknown pair");
}

double DistributionPanel::squared_min_indicator() const {
  double out = global_min * global_min;
  for (const auto& v : pairwise) out -= v.min * v.min;
  return out;
}

DistributionPanel distribution_panel(Family family, double p, double kappa_t) {
  const PureEnsemble ens = evolve_ensemble(MmesSpec::for_family(family, p), kappa_t);
  DistributionPanel out;
  out.family = family;
  out.p = p;
  out.kappa_t = kappa_t;
  out.m_indicator = out.global_negativity * out.global_negativity;
  out.global_min = min_qubit_support(ens.density(), 2);
  out.m_prime_indicator = out.global_min;
  const std::size_t side_a[] = {0};
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    const DensityMatrix rho = ens.reduce(pair_modes(kPairs[k]));
    out.pairwise[k] = {negativity(rho, side_a), min_luo_fu(rho)};
    out.m_indicator -= out.pairwise[k].negativity * out.pairwise[k].negativity;
    out.m_prime_indicator -= out.pairwise[k].min;
  }
  return out;
}

double global_negativity(Family family, double p, double kappa_t) {
  return negativity(evolve_four_partite(MmesSpec::for_family(family, p), kappa_t), kGlobalSide);
}

double global_min(Family family, double p, double kappa_t) {
  return min_qubit_support(evolve_four_partite(MmesSpec::for_family(family, p), kappa_t), 2);
}

double negativity_monogamy(double p, double kappa_t, Family family) {
  const PureEnsemble ens = evolve_ensemble(MmesSpec::for_family(family, p), kappa_t);
  double out = 0.25;
  for (Pair pair : kPairs) {
    const double n = pair_negativity(ens, pair);
    out -= n * n;
  }
  return out;
}

double negativity_monogamy_closed(double p, double kappa_t) {
  const ChannelParams params = damping_amplitudes(kappa_t);
  const ChannelParams swapped = params.swapped();
  const double terms[] = {negativity_c1c2_closed(p, params), negativity_c1r2_closed(p, params),
                          negativity_c1r2_closed(p, swapped), negativity_c1c2_closed(p, swapped)};
  double out = 0.25;
  for (double n : terms) out -= n * n;
  return out;
}

double min_distribution(double p, double kappa_t, Family family) {
  return distribution_panel(family, p, kappa_t).m_prime_indicator;
}

double min_distribution_closed(double p, double kappa_t, Family family) {
  if (family != Family::dim4)
    throw std::invalid_argument("min_distribution_closed: no closed form for " + std::string(to_string(family)) +
                                "; use min_distribution");
  require_probability(p, "min_distribution_closed");
  const ChannelParams params = damping_amplitudes(kappa_t);
  const double x2 = params.xi * params.xi, c2 = params.chi * params.chi;
  const double g1 = (1.0 - p) * (1.0 - c2 + c2 * c2);
  return (1.0 - p) * x2 * c2 * (g1 - std::sqrt(3.0) * p);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    out[k] = k == n ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n);
  return out;
}

std::vector<double> arange(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("arange: need step > 0 and lo <= hi");
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-6));
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = lo + step * static_cast<double>(k);
  return out;
}

Grid Grid::default_scan() {
  Grid g{linspace(0.0, 1.0, 100), linspace(0.0, 6.0, 300)};
  for (double t : {8.0, 10.0, 15.0, 20.0}) g.kappa_t.push_back(t);
  return g;
}

Grid Grid::coarse_scan() {
  Grid g{linspace(0.0, 1.0, 10), linspace(0.0, 6.0, 30)};
  for (double t : {10.0, 20.0}) g.kappa_t.push_back(t);
  return g;
}

ScanReport squared_min_scan(Family family, std::span<const double> p_grid, std::span<const double> kt_grid) {
  return scan(p_grid, kt_grid,
              [family](double p, double t) { return distribution_panel(family, p, t).squared_min_indicator(); });
}

ScanReport negativity_monogamy_scan(Family family, std::span<const double> p_grid, std::span<const double> kt_grid) {
  return scan(p_grid, kt_grid, [family](double p, double t) { return negativity_monogamy(p, t, family); });
}

int count_peaks(std::span<const double> values) {
  std::vector<double> merged;
  for (double v : values)
    if (merged.empty() || std::abs(v - merged.back()) > 1e-12) merged.push_back(v);
  int peaks = 0;
  for (std::size_t i = 1; i + 1 < merged.size(); ++i)
    if (merged[i] > merged[i - 1] && merged[i] > merged[i + 1]) ++peaks;
  return peaks;
}

int peak_census(PeakMeasure measure, double p) {
  require_probability(p, "peak_census");
  const std::vector<double> kts = linspace(0.0, 10.0, 10000);
  std::vector<double> values(kts.size());
  const auto modes = pair_modes(Pair::c1r2);
  const std::size_t side_a[] = {0};
  parallel_for(kts.size(), [&](std::size_t i) {
    const DensityMatrix rho = evolve_ensemble(MmesSpec::for_family(Family::dim4, p), kts[i]).reduce(modes);
    const double v = measure == PeakMeasure::negativity ? negativity(rho, side_a) : min_luo_fu(rho);
    values[i] = v < kNegativityClamp ? 0.0 : v;
  });
  return count_peaks(values);
}

double pair_curve_gap(double p) {
  const std::vector<double> kts = linspace(0.0, 6.0, 300);
  std::vector<double> gaps(kts.size());
  parallel_for(kts.size(), [&](std::size_t i) {
    const PureEnsemble ens = evolve_ensemble(MmesSpec::for_family(Family::dim4, p), kts[i]);
    gaps[i] = std::abs(min_luo_fu(ens.reduce(pair_modes(Pair::c1r2))) - min_luo_fu(ens.reduce(pair_modes(Pair::r1c2))));
  });
  return *std::max_element(gaps.begin(), gaps.end());
}

double esb_time(double p, Family family) {
  require_probability(p, "esb_time");
  const auto born = [&](double t) {
    return pair_negativity(evolve_ensemble(MmesSpec::for_family(family, p), t), Pair::r1r2) > 1e-10;
  };
  const std::vector<double> kts = arange(0.0, 20.0, 0.02);
  for (std::size_t k = 1; k < kts.size(); ++k) {
    if (!born(kts[k])) continue;
    double lo = kts[k - 1], hi = kts[k];
    while (hi - lo > 1e-8) {
      const double mid = 0.5 * (lo + hi);
      (born(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace mmes
