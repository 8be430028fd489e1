#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmes/dynamics.hpp"
#include "mmes/linalg.hpp"

namespace mmes {

// Negativities below this are reported as exactly zero.
inline constexpr double kNegativityClamp = 1e-12;

// (||rho^{T_A}||_1 - 1) / 2 with the partial transpose taken over `side_a`.
double negativity(const DensityMatrix& rho, std::span<const std::size_t> side_a);

// Two coefficients of the closed-form two-cavity spectrum come in two
// variants each: the odd chi power in C, and the power of (1-p) in front of B.
// Every combination is selectable so that the matching one is identified
// against the numerical eigensolver rather than assumed.
struct C1c2SpectrumReading {
  enum class CTerm { chi2, chi8 };
  enum class BPrefactor { linear, squared };

  CTerm c_term = CTerm::chi8;
  BPrefactor b_prefactor = BPrefactor::squared;

  std::string describe() const;
  static std::vector<C1c2SpectrumReading> all();
};

// The cavity/reservoir spectrum has one ambiguous sign: the chi^8 term of B4.
struct C1r2SpectrumReading {
  enum class B4Tail { minus, plus };

  B4Tail b4_tail = B4Tail::plus;

  std::string describe() const;
  static std::vector<C1r2SpectrumReading> all();
};

// lambda_1..lambda_8 of rho_c1c2^{T_c1} in their labelled order.
std::array<double, 8> pt_eigenvalues_c1c2_closed(double p, const ChannelParams& params,
                                                 C1c2SpectrumReading reading = {});
Spectrum pt_spectrum_c1c2_closed(double p, double kappa_t, C1c2SpectrumReading reading = {});

// lambda_1..lambda_8 of rho_c1r2^{T_c1} in their labelled order.
std::array<double, 8> pt_eigenvalues_c1r2_closed(double p, const ChannelParams& params,
                                                 C1r2SpectrumReading reading = {});
Spectrum pt_spectrum_c1r2_closed(double p, double kappa_t, C1r2SpectrumReading reading = {});

// lambda_2, lambda_6, lambda_7, lambda_11: the only eigenvalues of the 2x6
// two-cavity partial transpose that can turn negative.
std::array<double, 4> negative_eigs_dim6_closed(double p, const ChannelParams& params);
std::array<double, 4> negative_eigs_dim6_closed(double p, double kappa_t);

// Negativities assembled from the closed-form spectra. Taking ChannelParams
// lets them be fed swapped amplitudes for the reservoir-side pairs.
double negativity_c1c2_closed(double p, const ChannelParams& params);
double negativity_c1r2_closed(double p, const ChannelParams& params);
// Smaller eigenvalue of the PT block coupling |0,2> and |1,1>. The four values
// above miss it, yet it is negative for small p while
// 5(1-p) chi^8 (1 - 5 chi^4) > p (3 + 5 chi^4); it always vanishes no later
// than chi^4 = 1/5, so the ESD time is unaffected.
double fifth_eig_dim6_closed(double p, const ChannelParams& params);
// Sum over the four values above and the fifth block eigenvalue.
double negativity_dim6_closed(double p, const ChannelParams& params);

struct EsdCase {
  Family system = Family::dim4;
  // Below threshold_p the ESD time is p-independent and equals plateau_time.
  std::optional<double> threshold_p;
  std::optional<double> plateau_time;

  static EsdCase of(Family family);
};

// ESD time of the two cavities. p = 1 returns +infinity (asymptotic decay).
double esd_boundary(Family family, double p);

// Explicit p(kappa_t) form of the ESD line for each family.
double esd_line_p(Family family, double kappa_t);
// p(kappa_t) along which lambda_3 of the 2x4 spectrum vanishes.
double lambda3_zero_line_p(double kappa_t);
// The p-independent time at which lambda_5 of the 2x4 spectrum vanishes.
double lambda5_zero_time();

// ESD time found from the numerically evolved state alone: first kappa_t at
// which the partial transpose of rho_c1c2 has no eigenvalue below -1e-13.
double esd_time_numerical(Family family, double p);

// Threshold p at which the p-dependent ESD branch meets the plateau, found
// by bisection in p on the numerical spectrum at the plateau time.
double esd_threshold_numerical(Family family);

enum class Region { I, II, III, IV };

std::string to_string(Region region);

// Nested regions of the 2x4 family: I while lambda_3 < 0, II while only
// lambda_5 and lambda_7 can be negative, III while only lambda_7 is, IV once
// the partial transpose is positive semidefinite.
Region esd_region_classifier(double p, double kappa_t);

}  // namespace mmes
