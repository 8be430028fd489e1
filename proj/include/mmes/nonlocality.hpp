#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "mmes/dynamics.hpp"
#include "mmes/linalg.hpp"

namespace mmes {

// Normalized generalized Gell-Mann matrices for 2 <= d <= 8, ordered as the
// d(d-1)/2 symmetric, the d(d-1)/2 antisymmetric, then the d-1 diagonal ones.
// tr(L_a L_b) = delta_ab.
std::vector<Matrix> ggm_basis(std::size_t d);

// sigma_j' (x) sigma_j'' / 2 for j = 4 j' + j'' = 1..15 (sigma_0 = I).
std::vector<Matrix> pauli_pauli_basis();

enum class BasisTag { pauli_pauli, ggm };

std::string_view to_string(BasisTag tag);

// rho = I/(2d) + sum_i x_i X_i (x) I/sqrt(d) + sum_j y_j I/sqrt(2) (x) Y_j
//     + sum_ij T_ij X_i (x) Y_j, with X_i = sigma_i / sqrt(2).
struct BlochForm {
  std::size_t d = 0;
  BasisTag basis = BasisTag::ggm;
  std::array<double, 3> x{};
  std::vector<double> y;
  // 3 rows of d^2 - 1 entries.
  std::array<std::vector<double>, 3> t;

  std::array<std::array<double, 3>, 3> ttt() const;
};

BlochForm bloch_decompose(const DensityMatrix& rho, BasisTag basis = BasisTag::ggm);
DensityMatrix reconstruct(const BlochForm& form);

inline constexpr double kBlochXTol = 1e-9;

struct LuoFuBranches {
  double x_norm = 0.0;
  // tr TT^t - x^t TT^t x / |x|^2; meaningful only for x != 0.
  double nondegenerate = 0.0;
  // tr TT^t - lambda_min(TT^t).
  double degenerate = 0.0;
  double value() const { return x_norm > kBlochXTol ? nondegenerate : degenerate; }
};

// MIN of a qubit (x) qudit state. The qubit must be subsystem 0 and the
// remaining subsystems are treated as a single party of any dimension.
LuoFuBranches luo_fu_branches(const DensityMatrix& rho);
double min_luo_fu(const DensityMatrix& rho);
// Same value computed from an explicit Bloch decomposition (d <= 8).
double min_luo_fu(const BlochForm& form);

// Maximum of ||rho - Pi(rho)||^2 over qubit projective measurements that leave
// the qubit marginal invariant: a single direction when the Bloch vector is
// nonzero, otherwise a Fibonacci sphere grid of n_grid points followed by
// golden-section refinement around the best one.
double min_brute_force(const DensityMatrix& rho, std::size_t n_grid = 4096);

// Disturbance ||rho - Pi_n(rho)||^2 for the measurement along unit vector n.
double measurement_disturbance(const DensityMatrix& rho, const std::array<double, 3>& n);

// MIN across a cut whose first side has a two-dimensional support: the first
// `side_a` subsystems are restricted to the support of their marginal and the
// result is handed to min_luo_fu. Throws if the support is not two-dimensional.
double min_qubit_support(const DensityMatrix& rho, std::size_t side_a);

enum class MinFamily { c1c2_dim4, c1r2_dim4, global, c1c2_dim6, c1c2_dim8, initial };

std::string_view to_string(MinFamily family);
MinFamily min_family_from_string(std::string_view name);

double min_closed_form(MinFamily family, double p, const ChannelParams& params);
double min_closed_form(MinFamily family, double p, double kappa_t);

struct ContinuityReport {
  double limit_value = 0.0;
  double value_at_zero = 0.0;
  double gap = 0.0;
};

// Closed-form two-cavity MIN at kappa_t = 1e-2 .. 1e-7, Richardson-extrapolated
// to 0+ and compared with the kappa_t = 0 value.
ContinuityReport min_continuity_check(double p);

struct PurityRelation {
  double min_value = 0.0;
  double purity_half = 0.0;
};

PurityRelation min_initial_purity_relation(double p, Family family);

}  // namespace mmes
