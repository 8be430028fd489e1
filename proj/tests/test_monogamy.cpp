#include <gtest/gtest.h>

#include <cstdlib>

#include "mmes/entanglement.hpp"
#include "mmes/monogamy.hpp"
#include "mmes/nonlocality.hpp"
#include "mmes/parallel.hpp"
#include "oracles.hpp"

using namespace mmes;

namespace {

class ScopedWorkers {
 public:
  explicit ScopedWorkers(const char* n) {
    if (const char* old = std::getenv("MMES_WORKERS")) saved_ = old;
    setenv("MMES_WORKERS", n, 1);
  }
  ~ScopedWorkers() {
    if (saved_.empty())
      unsetenv("MMES_WORKERS");
    else
      setenv("MMES_WORKERS", saved_.c_str(), 1);
  }

 private:
  std::string saved_;
};

}  // namespace

TEST(Pairs, ModesAndNames) {
  EXPECT_EQ(pair_modes(Pair::c1c2), (std::array<std::size_t, 2>{kC1, kC2}));
  EXPECT_EQ(pair_modes(Pair::r1c2), (std::array<std::size_t, 2>{kR1, kC2}));
  EXPECT_EQ(to_string(Pair::c1r2), "c1r2");
}

TEST(Panel, InitialStateCarriesEverythingInTheCavities) {
  for (double p : {0.0, 0.5, 1.0}) {
    const DistributionPanel panel = distribution_panel(Family::dim4, p, 0.0);
    EXPECT_NEAR(panel.at(Pair::c1c2).negativity, 0.5, 1e-12);
    EXPECT_NEAR(panel.at(Pair::r1r2).negativity, 0.0, 1e-15);
    EXPECT_NEAR(panel.m_indicator, 0.0, 1e-12);
    EXPECT_NEAR(panel.m_prime_indicator, 0.0, 1e-12);
    EXPECT_NEAR(negativity_monogamy(p, 0.0, Family::dim4), 0.0, 1e-12);
  }
}

TEST(Panel, PairwiseValuesAgreeWithOracleReductions) {
  const double p = 0.75, kt = 1.0;
  const DistributionPanel panel = distribution_panel(Family::dim4, p, kt);
  const DensityMatrix full = evolve_four_partite(MmesSpec::for_family(Family::dim4, p), kt);
  const std::vector<std::size_t> dims{2, 2, 4, 4};
  for (Pair pair : kPairs) {
    const auto modes = pair_modes(pair);
    const DensityMatrix rho(oracle::partial_trace(full.matrix(), dims, {modes[0], modes[1]}), {2, 4});
    double neg = 0.0;
    for (double v : oracle::eigenvalues(oracle::partial_transpose(rho.matrix(), {2, 4}, 0)))
      if (v < 0) neg -= v;
    EXPECT_NEAR(panel.at(pair).negativity, neg, 1e-12) << to_string(pair);
    EXPECT_NEAR(panel.at(pair).min, min_luo_fu(rho), 1e-12) << to_string(pair);
  }
  double sum_n2 = 0.0;
  for (Pair pair : kPairs) sum_n2 += panel.at(pair).negativity * panel.at(pair).negativity;
  EXPECT_NEAR(panel.m_indicator, 0.25 - sum_n2, 1e-12);
  EXPECT_NEAR(panel.global_min, 0.5 * (1 - 2 * p + 2 * p * p), 1e-10);
  EXPECT_NEAR(global_negativity(Family::dim4, p, kt), 0.5, 1e-12);
}

TEST(Monogamy, ClosedAndNumericalAgree) {
  for (double p : {0.0, 0.3, 0.5, 1.0})
    for (double kt : {0.1, 0.8, 2.5}) {
      EXPECT_NEAR(negativity_monogamy_closed(p, kt), negativity_monogamy(p, kt, Family::dim4), 1e-10);
      EXPECT_NEAR(min_distribution_closed(p, kt), min_distribution(p, kt, Family::dim4), 1e-10);
      EXPECT_GE(negativity_monogamy(p, kt, Family::dim4), -1e-12);
    }
  EXPECT_THROW(min_distribution_closed(0.5, 1.0, Family::dim6), std::invalid_argument);
}

TEST(Monogamy, MinIndicatorExamples) {
  double lowest_half = INFINITY;
  for (double kt : linspace(0.0, 6.0, 60)) {
    EXPECT_NEAR(min_distribution(1.0, kt, Family::dim4), 0.0, 1e-10);
    EXPECT_GE(min_distribution(0.0, kt, Family::dim4), -1e-12);
    lowest_half = std::min(lowest_half, min_distribution(0.5, kt, Family::dim4));
  }
  EXPECT_LT(lowest_half, -1e-4);
  for (Family f : {Family::dim6, Family::dim8})
    EXPECT_NEAR(min_distribution(1.0, 0.7, f), 0.0, 1e-10) << to_string(f);
  // Sign change where (1-p)(1 - chi^2 + chi^4) = sqrt(3) p.
  const ChannelParams c = damping_amplitudes(1.0);
  const double g = 1 - c.chi * c.chi + std::pow(c.chi, 4), p0 = g / (g + std::sqrt(3.0));
  EXPECT_GT(min_distribution_closed(p0 - 0.01, 1.0), 0.0);
  EXPECT_LT(min_distribution_closed(p0 + 0.01, 1.0), 0.0);
}

TEST(Monogamy, ReservoirPairsMirrorCavityPairs) {
  const double p = 0.4, kt = 0.9;
  const ChannelParams swapped = damping_amplitudes(kt).swapped();
  const DistributionPanel panel = distribution_panel(Family::dim4, p, kt);
  EXPECT_NEAR(panel.at(Pair::r1r2).negativity, negativity_c1c2_closed(p, swapped), 1e-10);
  EXPECT_NEAR(panel.at(Pair::r1r2).min, min_closed_form(MinFamily::c1c2_dim4, p, swapped), 1e-10);
  EXPECT_NEAR(panel.at(Pair::r1c2).min, min_closed_form(MinFamily::c1r2_dim4, p, swapped), 1e-10);
}

TEST(Monogamy, SquaredMinIndicatorOnCoarseGrid) {
  const auto ps = linspace(0.0, 1.0, 4), kts = linspace(0.0, 3.0, 6);
  const ScanReport r = squared_min_scan(Family::dim4, ps, kts);
  EXPECT_EQ(r.points, ps.size() * kts.size());
  EXPECT_GE(r.min_value, -1e-12);
}

TEST(Grid, Shapes) {
  const Grid g = Grid::default_scan();
  EXPECT_EQ(g.p.size(), 101u);
  EXPECT_EQ(g.kappa_t.size(), 301u + 4u);
  EXPECT_EQ(g.kappa_t.back(), 20.0);
  EXPECT_EQ(linspace(0.0, 1.0, 4), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(arange(0.0, 1.0, 0.25).size(), 5u);
}

TEST(Peaks, CountPeaksUnits) {
  const std::vector<double> none{0, 1, 2, 3}, one{0, 1, 1, 1, 0}, two{0, 2, 1, 3, 0}, edge{3, 2, 1};
  EXPECT_EQ(count_peaks(none), 0);
  EXPECT_EQ(count_peaks(one), 1);
  EXPECT_EQ(count_peaks(two), 2);
  EXPECT_EQ(count_peaks(edge), 0);
  const std::vector<double> shoulder{0, 1, 1, 2, 0};
  EXPECT_EQ(count_peaks(shoulder), 1);
}

TEST(Peaks, CensusExamples) {
  EXPECT_EQ(peak_census(PeakMeasure::negativity, 0.0), 2);
  EXPECT_EQ(peak_census(PeakMeasure::negativity, 0.75), 1);
  EXPECT_EQ(peak_census(PeakMeasure::negativity, 1.0), 1);
  EXPECT_EQ(peak_census(PeakMeasure::negativity, 0.45), 2);
  EXPECT_LT(pair_curve_gap(1.0), 1e-10);
}

TEST(Esb, ReservoirEntanglementArrivesEarlierForLargerP) {
  double last = INFINITY;
  for (double p : {0.0, 0.3, 0.6, 0.9}) {
    const double t = esb_time(p);
    ASSERT_TRUE(std::isfinite(t)) << p;
    EXPECT_GT(negativity_c1c2_closed(p, damping_amplitudes(t + 1e-6).swapped()), 0.0);
    EXPECT_LT(t, last);
    EXPECT_LT(esd_boundary(Family::dim4, p), esd_boundary(Family::dim4, p + 0.05));
    last = t;
  }
}

TEST(Parallel, ResultsIndependentOfWorkerCount) {
  const auto ps = linspace(0.0, 1.0, 5), kts = linspace(0.0, 2.0, 5);
  ScanReport one, three;
  {
    ScopedWorkers w("1");
    EXPECT_EQ(worker_count(), 1u);
    one = negativity_monogamy_scan(Family::dim6, ps, kts);
  }
  {
    ScopedWorkers w("3");
    EXPECT_EQ(worker_count(), 3u);
    three = negativity_monogamy_scan(Family::dim6, ps, kts);
  }
  EXPECT_EQ(one.min_value, three.min_value);
  EXPECT_EQ(one.p_at, three.p_at);
  EXPECT_EQ(one.kappa_t_at, three.kappa_t_at);
  ScopedWorkers w("2");
  EXPECT_THROW(parallel_for(8, [](std::size_t i) { if (i == 5) throw std::runtime_error("x"); }), std::runtime_error);
}
