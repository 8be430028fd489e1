#include "mmes/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mmes {

void require_probability(double p, const char* where) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(where) + ": probability outside [0, 1]");
}

void require_time(double kappa_t, const char* where) {
  if (!std::isfinite(kappa_t) || kappa_t < 0.0)
    throw std::invalid_argument(std::string(where) + ": kappa_t must be finite and nonnegative");
}

ChannelParams ChannelParams::swapped() const {
  const double mirrored = chi > 0.0 ? -2.0 * std::log(chi) : std::numeric_limits<double>::infinity();
  return ChannelParams{mirrored, chi, xi};
}

ChannelParams damping_amplitudes(double kappa_t) {
  require_time(kappa_t, "damping_amplitudes");
  return ChannelParams{kappa_t, std::exp(-0.5 * kappa_t), std::sqrt(-std::expm1(-kappa_t))};
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::dim4: return "dim4";
    case Family::dim6: return "dim6";
    case Family::dim8: return "dim8";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  if (name == "dim4") return Family::dim4;
  if (name == "dim6") return Family::dim6;
  if (name == "dim8") return Family::dim8;
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected dim4, dim6 or dim8)");
}

std::size_t qudit_dim(Family family) {
  switch (family) {
    case Family::dim4: return 4;
    case Family::dim6: return 6;
    case Family::dim8: return 8;
  }
  throw std::invalid_argument("qudit_dim: unknown family");
}

std::size_t MmesSpec::qudit_dim() const {
  if (component_indices.empty()) return 0;
  return 2 * static_cast<std::size_t>(*std::max_element(component_indices.begin(), component_indices.end()));
}

void MmesSpec::validate() const {
  if (probabilities.empty()) throw std::invalid_argument("MmesSpec: no components");
  if (probabilities.size() != component_indices.size())
    throw std::invalid_argument("MmesSpec: probability and index counts differ");
  for (double p : probabilities)
    if (!(p >= 0.0)) throw std::invalid_argument("MmesSpec: negative probability");
  const double total = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("MmesSpec: probabilities do not sum to 1");
  for (int m : component_indices)
    if (m < 1) throw std::invalid_argument("MmesSpec: component indices start at 1");
  std::vector<int> sorted = component_indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("MmesSpec: component index collision");
}

MmesSpec MmesSpec::for_family(Family family, double p) {
  require_probability(p, "MmesSpec::for_family");
  const int partner = family == Family::dim4 ? 2 : family == Family::dim6 ? 3 : 4;
  return MmesSpec{{p, 1.0 - p}, {1, partner}};
}

DensityMatrix build_mmes(const MmesSpec& spec) {
  spec.validate();
  const std::size_t d = spec.qudit_dim();
  Matrix rho(2 * d, 2 * d);
  const double amp = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < spec.probabilities.size(); ++k) {
    const std::size_t base = 2 * static_cast<std::size_t>(spec.component_indices[k] - 1);
    std::vector<complex> ket(2 * d);
    ket[0 * d + base] = amp;
    ket[1 * d + base + 1] = amp;
    rho += Matrix::projector(ket) * spec.probabilities[k];
  }
  return DensityMatrix(std::move(rho), {2, d}, {"c1", "c2"});
}

double TwoModeState::amplitude(int cavity, int reservoir) const {
  if (cavity < 0 || reservoir < 0 || cavity + reservoir != photons) return 0.0;
  return coefficients[static_cast<std::size_t>(reservoir)];
}

double TwoModeState::norm() const {
  double sq = 0.0;
  for (double c : coefficients) sq += c * c;
  return std::sqrt(sq);
}

TwoModeState damp_fock_component(int n, const ChannelParams& params) {
  if (n < 0 || n > kMaxFockLevel)
    throw std::invalid_argument("damp_fock_component: photon number " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxFockLevel) + "]");
  TwoModeState out{n, std::vector<double>(static_cast<std::size_t>(n) + 1)};
  double binom = 1.0;
  for (int j = 0; j <= n; ++j) {
    out.coefficients[static_cast<std::size_t>(j)] =
        std::sqrt(binom) * std::pow(params.xi, n - j) * std::pow(params.chi, j);
    binom = binom * (n - j) / (j + 1);
  }
  return out;
}

DensityMatrix PureEnsemble::density() const {
  const std::size_t side = kets.empty() ? 0 : kets.front().size();
  Matrix rho(side, side);
  for (std::size_t k = 0; k < kets.size(); ++k) rho += Matrix::projector(kets[k]) * weights[k];
  return DensityMatrix(std::move(rho), dims, labels);
}

DensityMatrix PureEnsemble::reduce(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<std::size_t> out_dims;
  std::vector<std::string> out_labels;
  for (std::size_t idx : kept) {
    if (idx >= dims.size()) throw std::invalid_argument("PureEnsemble::reduce: subsystem index out of range");
    out_dims.push_back(dims[idx]);
    if (!labels.empty()) out_labels.push_back(labels[idx]);
  }
  std::size_t side = 1;
  for (std::size_t d : out_dims) side *= d;
  Matrix rho(side, side);
  for (std::size_t k = 0; k < kets.size(); ++k) rho += partial_trace_pure(kets[k], dims, kept) * weights[k];
  return DensityMatrix(std::move(rho), std::move(out_dims), std::move(out_labels));
}

PureEnsemble evolve_ensemble(const MmesSpec& spec, double kappa_t) {
  spec.validate();
  const ChannelParams params = damping_amplitudes(kappa_t);
  const std::size_t d = spec.qudit_dim();
  if (d - 1 > static_cast<std::size_t>(kMaxFockLevel))
    throw std::invalid_argument("evolve_four_partite: qudit dimension " + std::to_string(d) +
                                " exceeds the supported Fock range");

  const TwoModeState vacuum = damp_fock_component(0, params);
  const TwoModeState single = damp_fock_component(1, params);

  PureEnsemble out;
  out.dims = {2, 2, d, d};
  out.labels = {"c1", "r1", "c2", "r2"};
  const auto index = [d](int c1, int r1, int c2, int r2) {
    return ((static_cast<std::size_t>(c1) * 2 + static_cast<std::size_t>(r1)) * d + static_cast<std::size_t>(c2)) *
               d +
           static_cast<std::size_t>(r2);
  };
  const double amp = 1.0 / std::sqrt(2.0);

  for (std::size_t k = 0; k < spec.probabilities.size(); ++k) {
    if (spec.probabilities[k] == 0.0) continue;
    const int base = 2 * (spec.component_indices[k] - 1);
    const std::array<TwoModeState, 2> first{vacuum, single};
    const std::array<TwoModeState, 2> second{damp_fock_component(base, params), damp_fock_component(base + 1, params)};

    std::vector<complex> ket(4 * d * d);
    for (std::size_t branch = 0; branch < 2; ++branch) {
      const auto& a = first[branch];
      const auto& b = second[branch];
      for (int ja = 0; ja <= a.photons; ++ja)
        for (int jb = 0; jb <= b.photons; ++jb)
          ket[index(a.photons - ja, ja, b.photons - jb, jb)] +=
              amp * a.coefficients[static_cast<std::size_t>(ja)] * b.coefficients[static_cast<std::size_t>(jb)];
    }
    out.weights.push_back(spec.probabilities[k]);
    out.kets.push_back(std::move(ket));
  }
  return out;
}

DensityMatrix evolve_four_partite(const MmesSpec& spec, double kappa_t) {
  return evolve_ensemble(spec, kappa_t).density();
}

namespace {

void require_params(const ChannelParams& params, const char* where) {
  if (!(params.xi >= 0.0 && params.xi <= 1.0 && params.chi >= 0.0 && params.chi <= 1.0) ||
      std::abs(params.xi * params.xi + params.chi * params.chi - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(where) + ": amplitudes must satisfy xi^2 + chi^2 = 1");
}

// Symmetric 8x8 with the X-shaped pattern shared by both closed-form states.
DensityMatrix x_shaped(const std::array<double, 8>& diag, double c16, double c27, double c38,
                       std::vector<std::string> labels) {
  Matrix m = Matrix::diagonal(diag);
  m(0, 5) = m(5, 0) = c16;
  m(1, 6) = m(6, 1) = c27;
  m(2, 7) = m(7, 2) = c38;
  return DensityMatrix(std::move(m), {2, 4}, std::move(labels));
}

}  // namespace

DensityMatrix analytic_rho_c1c2(double p, const ChannelParams& params) {
  require_probability(p, "analytic_rho_c1c2");
  require_params(params, "analytic_rho_c1c2");
  const double q = 1.0 - p;
  const double x2 = params.xi * params.xi, x4 = x2 * x2, x6 = x4 * x2, x8 = x4 * x4;
  const double c2 = params.chi * params.chi, c4 = c2 * c2, c8 = c4 * c4;
  const std::array<double, 8> diag{
      (p + c4 + c8 - p * c8) / 2.0,
      x2 * c2 * (2.0 - p + 3.0 * q * c4) / 2.0,
      q * x4 * (1.0 + 3.0 * c4) / 2.0,
      q * x6 * c2 / 2.0,
      x2 * c2 * (p + c4 - p * c4) / 2.0,
      x4 * (p + 3.0 * q * c4) / 2.0,
      3.0 * q * x6 * c2 / 2.0,
      q * x8 / 2.0,
  };
  return x_shaped(diag, x2 * (p + std::sqrt(3.0) * q * c4) / 2.0, std::sqrt(1.5) * q * x4 * c2, q * x6 / 2.0,
                  {"c1", "c2"});
}

DensityMatrix analytic_rho_c1c2(double p, double kappa_t) {
  return analytic_rho_c1c2(p, damping_amplitudes(kappa_t));
}

DensityMatrix analytic_rho_c1r2(double p, const ChannelParams& params) {
  require_probability(p, "analytic_rho_c1r2");
  require_params(params, "analytic_rho_c1r2");
  const double q = 1.0 - p;
  const double x = params.xi, x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x8 = x4 * x4;
  const double c = params.chi, c2 = c * c, c3 = c2 * c, c4 = c2 * c2, c5 = c4 * c, c6 = c4 * c2, c8 = c4 * c4;
  const std::array<double, 8> diag{
      (p + q * x4) * (1.0 + x2 * c2) / 2.0,
      (2.0 * q * x2 * c2 + (p + 3.0 * q * x4) * c4) / 2.0,
      q * c4 * (1.0 + 3.0 * x2 * c2) / 2.0,
      q * c8 / 2.0,
      (x8 + p * (x4 - x8)) / 2.0,
      x2 * c2 * (p + 3.0 * q * x4) / 2.0,
      3.0 * q * x4 * c4 / 2.0,
      q * x2 * c6 / 2.0,
  };
  return x_shaped(diag, x * c * (p + std::sqrt(3.0) * q * x4) / 2.0, std::sqrt(1.5) * q * x3 * c3, q * x * c5 / 2.0,
                  {"c1", "r2"});
}

DensityMatrix analytic_rho_c1r2(double p, double kappa_t) {
  return analytic_rho_c1r2(p, damping_amplitudes(kappa_t));
}

double swap_xi_chi(const ClosedFormMeasure& measure, double p, double kappa_t) {
  return measure(p, damping_amplitudes(kappa_t).swapped());
}

}  // namespace mmes
