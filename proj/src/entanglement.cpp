#include "mmes/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace mmes {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt7 = std::sqrt(7.0);

constexpr double kBracketLo = 1e-6;
constexpr double kBracketHi = 20.0;
constexpr double kTimeTol = 1e-10;
// Eigenvalues above this count as nonnegative when the spectrum comes from
// the iterative eigensolver.
constexpr double kNumericalZero = -1e-13;

// sqrt that forgives rounding just below zero but lets a genuinely negative
// radicand (a wrong reading) surface as NaN.
double root(double x) {
  if (x < 0.0 && x > -1e-14) return 0.0;
  return std::sqrt(x);
}

double sum_negative(std::span<const double> values) {
  double total = 0.0;
  for (double v : values)
    if (v < 0.0) total -= v;
  return total < kNegativityClamp ? 0.0 : total;
}

Spectrum sorted_spectrum(std::span<const double> values, const char* where) {
  Spectrum out{{values.begin(), values.end()}};
  for (double v : out.eigenvalues)
    if (!std::isfinite(v)) throw std::domain_error(std::string(where) + ": closed form undefined at this point");
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

// Smallest t in [lo, hi] with done(t) true, assuming done is monotone.
// Returns +infinity when done(hi) is false.
double first_true(const std::function<bool(double)>& done, double lo, double hi, double tol) {
  if (done(lo)) return lo;
  if (!done(hi)) return std::numeric_limits<double>::infinity();
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (done(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double min_pt_eigenvalue_numerical(Family family, double p, double kappa_t) {
  const std::size_t keep[] = {kC1, kC2};
  const DensityMatrix rho = evolve_ensemble(MmesSpec::for_family(family, p), kappa_t).reduce(keep);
  return eigvals_hermitian(partial_transpose(rho, 0).matrix()).min();
}

}  // namespace

double negativity(const DensityMatrix& rho, std::span<const std::size_t> side_a) {
  if (side_a.empty() || side_a.size() >= rho.subsystem_count())
    throw std::invalid_argument("negativity: cut must leave both sides nonempty");
  const double n = 0.5 * (trace_norm(partial_transpose(rho, side_a).matrix()) - 1.0);
  return n < kNegativityClamp ? 0.0 : n;
}

std::string C1c2SpectrumReading::describe() const {
  std::string out = c_term == CTerm::chi8 ? "C: 5(1-p)^2 chi^8" : "C: 5(1-p)^2 chi^2";
  out += b_prefactor == BPrefactor::squared ? ", B: (1-p)^2 xi^12 (1+chi^4)" : ", B: (1-p) xi^12 (1+chi^4)";
  return out;
}

std::vector<C1c2SpectrumReading> C1c2SpectrumReading::all() {
  std::vector<C1c2SpectrumReading> out;
  for (auto c : {CTerm::chi2, CTerm::chi8})
    for (auto b : {BPrefactor::linear, BPrefactor::squared}) out.push_back({c, b});
  return out;
}

std::string C1r2SpectrumReading::describe() const {
  return b4_tail == B4Tail::plus ? "B4: +12(1-p)^2 chi^8" : "B4: -12(1-p)^2 chi^8";
}

std::vector<C1r2SpectrumReading> C1r2SpectrumReading::all() {
  return {{B4Tail::minus}, {B4Tail::plus}};
}

std::array<double, 8> pt_eigenvalues_c1c2_closed(double p, const ChannelParams& params,
                                                 C1c2SpectrumReading reading) {
  require_probability(p, "pt_eigenvalues_c1c2_closed");
  const double q = 1.0 - p;
  const double x2 = params.xi * params.xi, x4 = x2 * x2, x6 = x4 * x2, x8 = x4 * x4, x12 = x8 * x4;
  const double c2 = params.chi * params.chi, c4 = c2 * c2, c8 = c4 * c4, c12 = c8 * c4;

  const double a = (1.0 - 2.0 * p) * (1.0 - 2.0 * p) + 24.0 * q * q * c4;
  const double b_pref = reading.b_prefactor == C1c2SpectrumReading::BPrefactor::squared ? q * q : q;
  const double b = b_pref * x12 * (1.0 + c4);
  const double odd = reading.c_term == C1c2SpectrumReading::CTerm::chi8 ? c8 : c2;
  const double c = p * p + q * (1.0 + (2.0 * kSqrt3 - 1.0) * p) * c4 + 5.0 * q * q * odd + q * q * c12;

  const double s34 = 1.0 + 6.0 * q * c4;
  const double s56 = 2.0 * q * x6 * c2;
  const double s78 = c2 * (1.0 + 2.0 * q * c4);
  return {
      q * x8 / 2.0,
      (p + c4 + c8 - p * c8) / 2.0,
      x4 * (s34 - root(a)) / 4.0,
      x4 * (s34 + root(a)) / 4.0,
      (s56 - root(b)) / 2.0,
      (s56 + root(b)) / 2.0,
      x2 * (s78 - root(c)) / 2.0,
      x2 * (s78 + root(c)) / 2.0,
  };
}

Spectrum pt_spectrum_c1c2_closed(double p, double kappa_t, C1c2SpectrumReading reading) {
  return sorted_spectrum(pt_eigenvalues_c1c2_closed(p, damping_amplitudes(kappa_t), reading),
                         "pt_spectrum_c1c2_closed");
}

std::array<double, 8> pt_eigenvalues_c1r2_closed(double p, const ChannelParams& params,
                                                 C1r2SpectrumReading reading) {
  require_probability(p, "pt_eigenvalues_c1r2_closed");
  const double q = 1.0 - p;
  const double x2 = params.xi * params.xi, x4 = x2 * x2, x8 = x4 * x4;
  const double c2 = params.chi * params.chi, c4 = c2 * c2, c6 = c4 * c2, c8 = c4 * c4, c10 = c8 * c2,
               c12 = c8 * c4, c14 = c12 * c2;

  const double b1 = (7.0 - 5.0 * p) * c4 - 10.0 * q * c6 + 4.0 * q * c8;
  const double b2 = (16.0 - 8.0 * kSqrt3) * p + (14.0 - 24.0 * (2.0 - kSqrt3) * p) * c2 -
                    8.0 * (8.0 - (10.0 - 3.0 * kSqrt3) * p) * c4 + (123.0 - (111.0 - 8.0 * kSqrt3) * p) * c6 -
                    (104.0 - 96.0 * p) * c8 + 28.0 * q * c10 + 8.0 * q * c12 - 4.0 * q * c14;
  const double b3 = -(8.0 - 7.0 * p) * c4 + 12.0 * q * c6 - 6.0 * q * c8;
  const double tail = reading.b4_tail == C1r2SpectrumReading::B4Tail::plus ? 1.0 : -1.0;
  const double b4 = (3.0 - 2.0 * p) * (3.0 - 2.0 * p) - (36.0 - 2.0 * (23.0 - 6.0 * p) * p) * c2 +
                    (64.0 - 96.0 * p + 33.0 * p * p) * c4 - 12.0 * q * (4.0 - 3.0 * p) * c6 + tail * 12.0 * q * q * c8;
  const double b5 = c8 * (9.0 * x8 + 4.0 * x2 * c2 - 6.0 * x4 * c4 + c8);

  const double s34 = 1.0 - 2.0 * c2 + b1;
  const double r34 = root(1.0 - q * c2 * b2);
  const double s56 = (3.0 - 2.0 * p) * c2 + b3;
  const double r56 = root(c4 * b4);
  const double s78 = q * c4 * (3.0 * x4 + c4);
  const double r78 = root(q * q * b5);
  return {
      q * x2 * c6 / 2.0,
      (1.0 + x2 * c2) * (p + q * x4) / 2.0,
      (s34 - r34) / 4.0,
      (s34 + r34) / 4.0,
      (s56 - r56) / 4.0,
      (s56 + r56) / 4.0,
      (s78 - r78) / 4.0,
      (s78 + r78) / 4.0,
  };
}

Spectrum pt_spectrum_c1r2_closed(double p, double kappa_t, C1r2SpectrumReading reading) {
  return sorted_spectrum(pt_eigenvalues_c1r2_closed(p, damping_amplitudes(kappa_t), reading),
                         "pt_spectrum_c1r2_closed");
}

std::array<double, 4> negative_eigs_dim6_closed(double p, const ChannelParams& params) {
  require_probability(p, "negative_eigs_dim6_closed");
  const double q = 1.0 - p;
  const double x2 = params.xi * params.xi, x4 = x2 * x2, x6 = x4 * x2, x8 = x4 * x4, x10 = x8 * x2;
  const double c2 = params.chi * params.chi, c4 = c2 * c2, c8 = c4 * c4, c12 = c8 * c4, c16 = c8 * c8,
               c20 = c16 * c4;
  const double h1 = x4 * (p * p + 2.0 * kSqrt5 * q * p * c8 + q * q * (4.0 * c12 + 13.0 * c16 + 4.0 * c20));
  return {
      q * x10 * (3.0 * c2 - root(1.0 + 4.0 * c4)) / 2.0,
      q * x8 * (1.0 + 15.0 * c4 - root(1.0 + 70.0 * c4 + 25.0 * c8)) / 4.0,
      q * x6 * c2 * (1.0 + 5.0 * c4 - root(1.0 + 15.0 * c4)),
      x2 * c2 * (c4 * (2.0 + 3.0 * c4) + p * (1.0 - 2.0 * c4 - 3.0 * c8)) / 2.0 - root(h1) / 2.0,
  };
}

std::array<double, 4> negative_eigs_dim6_closed(double p, double kappa_t) {
  return negative_eigs_dim6_closed(p, damping_amplitudes(kappa_t));
}

double negativity_c1c2_closed(double p, const ChannelParams& params) {
  return sum_negative(pt_eigenvalues_c1c2_closed(p, params));
}

double negativity_c1r2_closed(double p, const ChannelParams& params) {
  return sum_negative(pt_eigenvalues_c1r2_closed(p, params));
}

double fifth_eig_dim6_closed(double p, const ChannelParams& params) {
  require_probability(p, "fifth_eig_dim6_closed");
  const double q = 1.0 - p;
  const double x4 = std::pow(params.xi, 4), c2 = params.chi * params.chi, c4 = c2 * c2, c6 = c4 * c2, c8 = c4 * c4;
  const double a = q * x4 * c4 * (3.0 + 5.0 * c4);
  const double b = x4 * (p + 5.0 * q * c8) / 2.0;
  const double c = std::sqrt(10.0) * q * x4 * c6;
  return (a + b) / 2.0 - std::hypot((a - b) / 2.0, c);
}

double negativity_dim6_closed(double p, const ChannelParams& params) {
  return sum_negative(negative_eigs_dim6_closed(p, params)) + sum_negative(std::array{fifth_eig_dim6_closed(p, params)});
}

EsdCase EsdCase::of(Family family) {
  switch (family) {
    case Family::dim4: return {family, std::nullopt, std::nullopt};
    case Family::dim6:
      return {family, (347.0 - 125.0 * kSqrt5) / 1922.0, std::log((5.0 + kSqrt5) / 4.0)};
    case Family::dim8:
      return {family, (8669.0 - 2401.0 * kSqrt7) / 370191.0, std::log((7.0 + kSqrt7) / 6.0)};
  }
  throw std::invalid_argument("EsdCase::of: unknown family");
}

double esd_boundary(Family family, double p) {
  require_probability(p, "esd_boundary");
  if (p == 1.0) return std::numeric_limits<double>::infinity();

  switch (family) {
    case Family::dim4: {
      const auto done = [p](double t) { return pt_eigenvalues_c1c2_closed(p, damping_amplitudes(t))[6] >= 0.0; };
      return first_true(done, kBracketLo, kBracketHi, kTimeTol);
    }
    case Family::dim6: {
      const auto done = [p](double t) {
        const auto eigs = negative_eigs_dim6_closed(p, t);
        return *std::min_element(eigs.begin(), eigs.end()) >= 0.0;
      };
      const EsdCase esd = EsdCase::of(family);
      if (p <= *esd.threshold_p) return *esd.plateau_time;
      return first_true(done, *esd.plateau_time, kBracketHi, kTimeTol);
    }
    case Family::dim8: {
      const EsdCase esd = EsdCase::of(family);
      if (p <= *esd.threshold_p) return *esd.plateau_time;
      return first_true([p](double t) { return min_pt_eigenvalue_numerical(Family::dim8, p, t) >= kNumericalZero; },
                        *esd.plateau_time, kBracketHi, kTimeTol);
    }
  }
  throw std::invalid_argument("esd_boundary: unknown family");
}

double esd_line_p(Family family, double kappa_t) {
  require_time(kappa_t, "esd_line_p");
  if (kappa_t == 0.0) throw std::invalid_argument("esd_line_p: kappa_t must be positive");
  const double c2 = -std::expm1(-kappa_t), c4 = c2 * c2, c8 = c4 * c4, c12 = c8 * c4, c16 = c8 * c8,
               c20 = c16 * c4, c24 = c12 * c12, c28 = c24 * c4;
  switch (family) {
    case Family::dim4: {
      const double disc = 3.0 - 2.0 * kSqrt3 + 4.0 * (2.0 - kSqrt3) * c4 + c8;
      return (1.0 - kSqrt3 + 3.0 * c4 - 3.0 * c8 + std::sqrt(disc)) /
             (1.0 - 2.0 * kSqrt3 + 1.0 / c4 + 5.0 * c4 - 3.0 * c8);
    }
    case Family::dim6: {
      const double j1 = 4.0 - 2.0 * kSqrt5 + 3.0 * (3.0 - kSqrt5) * c4 + 2.0 * c8;
      const double j2 = 2.0 - kSqrt5 + 3.0 * c4 + c8 - 5.0 * c12;
      return (std::sqrt(2.0) * c8 * std::sqrt(j1) + c8 * j2) /
             (1.0 - c4 + 2.0 * (2.0 - kSqrt5) * c8 + 6.0 * c12 + c16 - 5.0 * c20);
    }
    case Family::dim8: {
      const double k1 = 3.0 - kSqrt7 + 4.0 * c4 + c12 - 7.0 * c16;
      const double k2 = 15.0 - 6.0 * kSqrt7 + 8.0 * (4.0 - kSqrt7) * c4 + 9.0 * c8;
      return c12 * (k1 + std::sqrt(k2)) / (1.0 - c4 + 2.0 * (3.0 - kSqrt7) * c12 + 8.0 * c16 + c24 - 7.0 * c28);
    }
  }
  throw std::invalid_argument("esd_line_p: unknown family");
}

double lambda3_zero_line_p(double kappa_t) {
  require_time(kappa_t, "lambda3_zero_line_p");
  const double e = std::exp(kappa_t);
  return 3.0 * (e - 1.0) * (e - 1.0) * (3.0 - 6.0 * e + 2.0 * e * e) /
         (9.0 - 36.0 * e + 48.0 * e * e - 24.0 * e * e * e + 2.0 * e * e * e * e);
}

double lambda5_zero_time() { return std::log((3.0 + kSqrt3) / 2.0); }

double esd_time_numerical(Family family, double p) {
  require_probability(p, "esd_time_numerical");
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return first_true([&](double t) { return min_pt_eigenvalue_numerical(family, p, t) >= kNumericalZero; },
                    kBracketLo, kBracketHi, kTimeTol);
}

double esd_threshold_numerical(Family family) {
  const EsdCase esd = EsdCase::of(family);
  if (!esd.plateau_time) throw std::invalid_argument("esd_threshold_numerical: dim4 has no plateau");
  // Past the threshold the p-dependent branch is still negative when the
  // plateau branch closes.
  const double t = *esd.plateau_time;
  double lo = 0.0, hi = 0.5;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (min_pt_eigenvalue_numerical(family, mid, t) < kNumericalZero ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string to_string(Region region) {
  switch (region) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
  }
  return "?";
}

Region esd_region_classifier(double p, double kappa_t) {
  const auto l = pt_eigenvalues_c1c2_closed(p, damping_amplitudes(kappa_t));
  const auto negative = [](double v) { return v < -kNegativityClamp; };
  if (negative(l[2])) return Region::I;
  if (negative(l[4])) return Region::II;
  if (negative(l[6])) return Region::III;
  return Region::IV;
}

}  // namespace mmes
