#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mmes/linalg.hpp"

namespace mmes {

// Damping amplitudes of a cavity coupled to a flat-spectrum vacuum reservoir.
// xi is the amplitude left in the cavity, chi the amplitude leaked into the
// reservoir; xi^2 + chi^2 = 1.
struct ChannelParams {
  double kappa_t = 0.0;
  double xi = 1.0;
  double chi = 0.0;

  // Exchanges xi and chi. kappa_t becomes the mirrored time -ln(chi^2), which
  // is +infinity for the undamped point.
  ChannelParams swapped() const;
};

ChannelParams damping_amplitudes(double kappa_t);

// The three MMES families studied: Bell component |psi_1> mixed with
// |psi_2>, |psi_3> or |psi_4>, living in 2x4, 2x6 and 2x8.
enum class Family { dim4, dim6, dim8 };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);
std::size_t qudit_dim(Family family);

// Convex mixture sum_m p_m |psi_m><psi_m| with
// |psi_m> = (|0, 2(m-1)> + |1, 2(m-1)+1>) / sqrt(2).
struct MmesSpec {
  std::vector<double> probabilities;
  std::vector<int> component_indices;

  // 2 x (largest component index).
  std::size_t qudit_dim() const;
  // Throws std::invalid_argument on a malformed mixture.
  void validate() const;

  static MmesSpec for_family(Family family, double p);
};

DensityMatrix build_mmes(const MmesSpec& spec);

inline constexpr int kMaxFockLevel = 7;

// |phi_n^t> = sum_j sqrt(C(n,j)) xi^(n-j) chi^j |n-j>_cavity |j>_reservoir.
struct TwoModeState {
  int photons = 0;
  // coefficients[j] multiplies |n-j>_c |j>_r.
  std::vector<double> coefficients;

  double amplitude(int cavity, int reservoir) const;
  double norm() const;
};

TwoModeState damp_fock_component(int n, const ChannelParams& params);

// Positions of the four modes inside the evolved state.
inline constexpr std::size_t kC1 = 0;
inline constexpr std::size_t kR1 = 1;
inline constexpr std::size_t kC2 = 2;
inline constexpr std::size_t kR2 = 3;

// Evolved four-partite state kept as a weighted set of pure components, the
// form in which it is produced; reductions are taken directly from the kets.
struct PureEnsemble {
  std::vector<std::size_t> dims;
  std::vector<std::string> labels;
  std::vector<double> weights;
  std::vector<std::vector<complex>> kets;

  DensityMatrix density() const;
  DensityMatrix reduce(std::span<const std::size_t> keep) const;
};

PureEnsemble evolve_ensemble(const MmesSpec& spec, double kappa_t);

// Four-partite state ordered (c1, r1, c2, r2) with dims [2, 2, d', d'].
DensityMatrix evolve_four_partite(const MmesSpec& spec, double kappa_t);

// Closed-form two-cavity state of the 2x4 family in the basis |00>..|13>.
DensityMatrix analytic_rho_c1c2(double p, const ChannelParams& params);
DensityMatrix analytic_rho_c1c2(double p, double kappa_t);

// Closed-form cavity-1 / reservoir-2 state of the 2x4 family.
DensityMatrix analytic_rho_c1r2(double p, const ChannelParams& params);
DensityMatrix analytic_rho_c1r2(double p, double kappa_t);

// A quantity given in closed form as a function of (p, xi, chi).
using ClosedFormMeasure = std::function<double(double p, const ChannelParams& params)>;

// Evaluates `measure` at (p, kappa_t) with xi and chi exchanged.
double swap_xi_chi(const ClosedFormMeasure& measure, double p, double kappa_t);

void require_probability(double p, const char* where);
void require_time(double kappa_t, const char* where);

}  // namespace mmes
