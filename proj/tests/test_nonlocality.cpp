#include <gtest/gtest.h>

#include <random>

#include "mmes/monogamy.hpp"
#include "mmes/nonlocality.hpp"
#include "oracles.hpp"

using namespace mmes;

namespace {

const double kSqrt3 = std::sqrt(3.0);

DensityMatrix cavities(Family f, double p, double kt) {
  const std::size_t keep[] = {kC1, kC2};
  return evolve_ensemble(MmesSpec::for_family(f, p), kt).reduce(keep);
}

double hs(const Matrix& a, const Matrix& b) { return (a.adjoint() * b).trace().real(); }

// tr(rho sigma_i (x) sigma_j' (x) sigma_j''): the unnormalized Pauli correlation.
double pauli_corr(const DensityMatrix& rho, int i, int j) {
  Matrix s[4] = {Matrix::identity(2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
  s[1](0, 1) = s[1](1, 0) = 1.0;
  s[2](0, 1) = complex(0, -1);
  s[2](1, 0) = complex(0, 1);
  s[3](0, 0) = 1.0;
  s[3](1, 1) = -1.0;
  return (rho.matrix() * kron(s[i], kron(s[j / 4], s[j % 4]))).trace().real();
}

}  // namespace

TEST(Ggm, OrthonormalTracelessHermitian) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto basis = ggm_basis(d);
    ASSERT_EQ(basis.size(), d * d - 1);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      EXPECT_NEAR(std::abs(basis[a].trace()), 0.0, 1e-15);
      EXPECT_EQ(hermiticity_defect(basis[a]), 0.0);
      for (std::size_t b = 0; b < basis.size(); ++b) EXPECT_NEAR(hs(basis[a], basis[b]), a == b ? 1.0 : 0.0, 1e-14);
    }
  }
  EXPECT_THROW(ggm_basis(1), std::invalid_argument);
  EXPECT_THROW(ggm_basis(9), std::invalid_argument);
}

TEST(Ggm, SmallCases) {
  const auto two = ggm_basis(2);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(two[0](0, 1).real(), s, 1e-16);
  EXPECT_NEAR(two[1](1, 0).imag(), s, 1e-16);
  EXPECT_NEAR(two[2](1, 1).real(), -s, 1e-16);
  const auto three = ggm_basis(3);
  const Matrix& diag2 = three.back();
  EXPECT_NEAR(diag2(0, 0).real() / diag2(2, 2).real(), -0.5, 1e-15);
  EXPECT_NEAR(diag2(1, 1).real(), diag2(0, 0).real(), 1e-16);
  const auto pp = pauli_pauli_basis();
  ASSERT_EQ(pp.size(), 15u);
  for (std::size_t a = 0; a < 15; ++a)
    for (std::size_t b = 0; b < 15; ++b) EXPECT_NEAR(hs(pp[a], pp[b]), a == b ? 1.0 : 0.0, 1e-15);
}

TEST(Bloch, ReconstructionRoundTrip) {
  std::mt19937_64 rng(21);
  for (std::size_t d = 2; d <= 8; ++d) {
    const DensityMatrix rho(oracle::random_density(2 * d, rng), {2, d});
    EXPECT_LT(max_abs_diff(reconstruct(bloch_decompose(rho)).matrix(), rho.matrix()), 1e-12) << d;
  }
  const DensityMatrix rho(oracle::random_density(8, rng), {2, 4});
  EXPECT_LT(max_abs_diff(reconstruct(bloch_decompose(rho, BasisTag::pauli_pauli)).matrix(), rho.matrix()), 1e-12);
  EXPECT_THROW(bloch_decompose(DensityMatrix(oracle::random_density(12, rng), {2, 6}), BasisTag::pauli_pauli),
               std::invalid_argument);
  EXPECT_THROW(bloch_decompose(DensityMatrix(oracle::random_density(6, rng), {3, 2})), std::invalid_argument);
}

TEST(Bloch, MaximallyMixedHasNoComponents) {
  const BlochForm f = bloch_decompose(DensityMatrix(Matrix::identity(8) * 0.125, {2, 4}));
  for (double v : f.x) EXPECT_EQ(v, 0.0);
  for (double v : f.y) EXPECT_NEAR(v, 0.0, 1e-16);
  for (const auto& row : f.t)
    for (double v : row) EXPECT_NEAR(v, 0.0, 1e-16);
}

TEST(Bloch, TwoCavityComponents) {
  const double p = 0.3, kt = 0.7;
  const ChannelParams c = damping_amplitudes(kt);
  const double x2 = c.xi * c.xi, x4 = x2 * x2, c2 = c.chi * c.chi, c4 = c2 * c2, c6 = c4 * c2;
  const DensityMatrix rho = analytic_rho_c1c2(p, c);
  const BlochForm f = bloch_decompose(rho, BasisTag::pauli_pauli);
  EXPECT_NEAR(f.x[0], 0.0, 1e-16);
  EXPECT_NEAR(f.x[1], 0.0, 1e-16);
  EXPECT_NEAR(f.x[2], c2 / (2.0 * std::sqrt(2.0)), 1e-15);

  // T' = 2 sqrt(2) T in the Pauli (x) Pauli basis.
  const auto tp = [&](int i, int j) { return 2.0 * std::sqrt(2.0) * f.t[i - 1][j - 1]; };
  const double t11 = x2 * (p + (1 - p) * x4 + kSqrt3 * (1 - p) * c4);
  EXPECT_NEAR(tp(1, 1), t11, 1e-14);
  EXPECT_NEAR(tp(2, 2), -t11, 1e-14);
  EXPECT_NEAR(tp(3, 3), (1 - 2 * c2 + 2 * c4) * (1 - 4 * (1 - p) * x2 * c2), 1e-14);
  const double t15 = std::sqrt(6.0) * (1 - p) * x4 * c2;
  EXPECT_NEAR(tp(1, 5), t15, 1e-14);
  EXPECT_NEAR(tp(1, 10), t15, 1e-14);
  EXPECT_NEAR(tp(2, 9), -t15, 1e-14);
  EXPECT_NEAR(tp(2, 6), t15, 1e-14);
  EXPECT_NEAR(tp(3, 6), 0.0, 1e-14);
  EXPECT_NEAR(tp(1, 13), x2 * (p - (1 - p) * x4 + kSqrt3 * (1 - p) * c4), 1e-14);
  EXPECT_NEAR(tp(2, 14), -x2 * (p - (1 - p) * x4 + kSqrt3 * (1 - p) * c4), 1e-14);
  EXPECT_NEAR(tp(3, 12), c2 - 4 * (1 - p) * x4 * c4, 1e-14);
  EXPECT_NEAR(tp(3, 15), 2 * p - 1 + (4 - 6 * p) * c2 - (8 - 10 * p) * c4 + 6 * (1 - p) * c6, 1e-14);
  // The same entries straight from Pauli strings.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 15; ++j) EXPECT_NEAR(tp(i, j), pauli_corr(rho, i, j), 1e-14) << i << "," << j;
}

TEST(LuoFu, Examples) {
  for (double p : {0.0, 0.5, 0.8})
    EXPECT_NEAR(min_luo_fu(build_mmes(MmesSpec::for_family(Family::dim4, p))), (p - 0.5) * (p - 0.5) + 0.25, 1e-14);
  std::mt19937_64 rng(4);
  Matrix qubit(2, 2);
  qubit(0, 0) = 0.8;
  qubit(1, 1) = 0.2;
  qubit(0, 1) = qubit(1, 0) = 0.1;
  const DensityMatrix product =
      tensor(DensityMatrix(qubit, {2}), DensityMatrix(oracle::random_density(4, rng), {4}));
  EXPECT_NEAR(min_luo_fu(product), 0.0, 1e-15);
  EXPECT_NEAR(min_luo_fu(analytic_rho_c1c2(0.3, 0.7)), min_closed_form(MinFamily::c1c2_dim4, 0.3, 0.7), 1e-10);
}

TEST(LuoFu, BasisInvarianceAndGramRoute) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix rho(oracle::random_density(8, rng), {2, 4});
    const double gram = min_luo_fu(rho);
    EXPECT_NEAR(min_luo_fu(bloch_decompose(rho, BasisTag::ggm)), gram, 1e-12);
    EXPECT_NEAR(min_luo_fu(bloch_decompose(rho, BasisTag::pauli_pauli)), gram, 1e-12);
  }
  const DensityMatrix six(oracle::random_density(12, rng), {2, 6});
  EXPECT_NEAR(min_luo_fu(bloch_decompose(six)), min_luo_fu(six), 1e-12);
}

TEST(LuoFu, BranchesAgreeAsBlochVectorVanishes) {
  for (double p : {0.0, 0.3, 0.8})
    for (double kt : {1e-7, 1e-6}) {
      const LuoFuBranches b = luo_fu_branches(analytic_rho_c1c2(p, kt));
      ASSERT_GT(b.x_norm, 0.0);
      ASSERT_LT(b.x_norm, 1e-6);
      EXPECT_LT(std::abs(b.nondegenerate - b.degenerate), 1e-5);
    }
}

TEST(BruteForce, Examples) {
  std::vector<complex> bell(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(min_brute_force(DensityMatrix(Matrix::projector(bell), {2, 2})), 0.5, 1e-9);
  EXPECT_NEAR(min_brute_force(DensityMatrix(Matrix::identity(8) * 0.125, {2, 4})), 0.0, 1e-15);
  EXPECT_THROW(min_brute_force(DensityMatrix(Matrix::identity(8) * 0.125, {2, 4}), 10), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    const DensityMatrix rho(oracle::random_density(8, rng), {2, 4});
    const double diff = min_brute_force(rho) - min_luo_fu(rho);
    EXPECT_GE(diff, -1e-6);
    EXPECT_LE(diff, 1e-9);
  }
}

TEST(BruteForce, SphereSearchOnUnpolarizedQubit) {
  // Random local unitaries keep the qubit marginal at I/2 but move the optimum
  // away from the coordinate axes.
  std::mt19937_64 rng(6);
  for (double p : {0.2, 0.5, 0.9}) {
    const DensityMatrix base = build_mmes(MmesSpec::for_family(Family::dim4, p));
    const Matrix u = kron(oracle::random_unitary(2, rng), Matrix::identity(4));
    const DensityMatrix rho(u * base.matrix() * u.adjoint(), {2, 4});
    const double diff = min_brute_force(rho) - min_luo_fu(rho);
    EXPECT_GE(diff, -1e-6);
    EXPECT_LE(diff, 1e-9);
  }
}

TEST(ClosedForms, EndpointsAndAsymptotics) {
  for (double p : {0.0, 0.3, 1.0}) {
    EXPECT_NEAR(min_closed_form(MinFamily::global, p, 3.0), (1 - 2 * p + 2 * p * p) / 2, 1e-15);
    EXPECT_NEAR(min_closed_form(MinFamily::c1c2_dim4, p, 0.0), min_closed_form(MinFamily::initial, p, 0.0), 1e-15);
    EXPECT_NEAR(min_closed_form(MinFamily::initial, p, 0.0), min_closed_form(MinFamily::initial, 1 - p, 0.0), 1e-15);
    EXPECT_EQ(min_closed_form(MinFamily::c1r2_dim4, p, 0.0), 0.0);
    EXPECT_LT(min_closed_form(MinFamily::c1c2_dim4, p, 40.0), 1e-10);
  }
  EXPECT_NEAR(min_closed_form(MinFamily::global, 1.0, 0.0), 0.5, 1e-15);
  double asym = 0.0;
  for (double kt : linspace(0.0, 6.0, 300))
    asym = std::max(asym, std::abs(min_closed_form(MinFamily::c1c2_dim4, 1.0, kt) -
                                   min_closed_form(MinFamily::c1c2_dim4, 0.0, kt)));
  EXPECT_GT(asym, 1e-3);
  EXPECT_EQ(min_family_from_string("c1c2_dim6"), MinFamily::c1c2_dim6);
  EXPECT_THROW(min_family_from_string("c1c2_dim5"), std::invalid_argument);
}

TEST(ClosedForms, HigherDimensionalFamiliesMatchNumerics) {
  for (double p : {0.0, 0.4, 1.0})
    for (double kt : {0.05, 0.6, 2.0}) {
      EXPECT_NEAR(min_luo_fu(cavities(Family::dim6, p, kt)), min_closed_form(MinFamily::c1c2_dim6, p, kt), 1e-10);
      EXPECT_NEAR(min_luo_fu(cavities(Family::dim8, p, kt)), min_closed_form(MinFamily::c1c2_dim8, p, kt), 1e-10);
    }
}

TEST(Continuity, Examples) {
  const ContinuityReport half = min_continuity_check(0.5);
  EXPECT_NEAR(half.limit_value, 0.25, 1e-8);
  EXPECT_EQ(half.value_at_zero, 0.25);
  const ContinuityReport zero = min_continuity_check(0.0);
  EXPECT_NEAR(zero.limit_value, 0.5, 1e-8);
  EXPECT_LT(min_continuity_check(0.3).gap, 1e-8);
}

TEST(PurityRelation, Examples) {
  const PurityRelation half = min_initial_purity_relation(0.5, Family::dim4);
  EXPECT_NEAR(half.min_value, 0.25, 1e-14);
  EXPECT_NEAR(half.purity_half, 0.25, 1e-15);
  const PurityRelation one = min_initial_purity_relation(1.0, Family::dim6);
  EXPECT_NEAR(one.min_value, 0.5, 1e-14);
  EXPECT_NEAR(one.purity_half, 0.5, 1e-15);
  const PurityRelation eight = min_initial_purity_relation(0.8, Family::dim8);
  EXPECT_NEAR(eight.min_value, eight.purity_half, 1e-12);
  EXPECT_NEAR(eight.min_value, 0.34, 1e-12);
}

TEST(QubitSupport, GlobalCutAndErrors) {
  for (Family f : {Family::dim4, Family::dim8})
    EXPECT_NEAR(global_min(f, 0.3, 0.9), (1 - 0.6 + 0.18) / 2, 1e-10);
  EXPECT_THROW(min_qubit_support(DensityMatrix(Matrix::identity(16) * (1.0 / 16), {4, 4}), 1), std::domain_error);
  EXPECT_THROW(min_qubit_support(DensityMatrix(Matrix::identity(16) * (1.0 / 16), {4, 4}), 2), std::invalid_argument);
}
