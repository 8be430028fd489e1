#include "mmes/nonlocality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mmes {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt7 = std::sqrt(7.0);

std::array<Matrix, 3> pauli_over_sqrt2() {
  const double s = 1.0 / std::sqrt(2.0);
  std::array<Matrix, 3> out{Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
  out[0](0, 1) = out[0](1, 0) = s;
  out[1](0, 1) = complex(0.0, -s);
  out[1](1, 0) = complex(0.0, s);
  out[2](0, 0) = s;
  out[2](1, 1) = -s;
  return out;
}

void require_qubit_first(const DensityMatrix& rho, const char* where) {
  if (rho.subsystem_count() < 2 || rho.dims().front() != 2)
    throw std::invalid_argument(std::string(where) + ": expected a qubit (x) qudit state with the qubit first");
}

// R_i = Tr_A[(X_i (x) I) rho] for the three qubit operators.
std::array<Matrix, 3> qubit_contractions(const DensityMatrix& rho) {
  const std::size_t d = rho.side() / 2;
  const auto x = pauli_over_sqrt2();
  const Matrix& m = rho.matrix();
  std::array<Matrix, 3> out{Matrix(d, d), Matrix(d, d), Matrix(d, d)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t a2 = 0; a2 < 2; ++a2) {
        const complex coeff = x[i](a, a2);
        if (coeff == 0.0) continue;
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t b2 = 0; b2 < d; ++b2) out[i](b, b2) += coeff * m(a2 * d + b, a * d + b2);
      }
  return out;
}

double trace_product_real(const Matrix& a, const Matrix& b) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) sum += (a(r, c) * b(c, r)).real();
  return sum;
}

LuoFuBranches branches_from(const std::array<double, 3>& x, const std::array<std::array<double, 3>, 3>& g) {
  Matrix gm(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) gm(i, k) = g[i][k];
  const double tr = g[0][0] + g[1][1] + g[2][2];

  LuoFuBranches out;
  const double xx = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  out.x_norm = std::sqrt(xx);
  out.degenerate = tr - eigvals_hermitian(gm).min();
  if (xx > 0.0) {
    double quad = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) quad += x[i] * g[i][k] * x[k];
    out.nondegenerate = tr - quad / xx;
  } else {
    out.nondegenerate = out.degenerate;
  }
  return out;
}

// Maximizes f on [a, b]; returns the argmax.
double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

using Vec3 = std::array<double, 3>;

Vec3 normalized(const Vec3& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Two unit vectors completing n to an orthonormal frame.
std::pair<Vec3, Vec3> tangent_frame(const Vec3& n) {
  const Vec3 seed = std::abs(n[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  const double dot = seed[0] * n[0] + seed[1] * n[1] + seed[2] * n[2];
  const Vec3 e1 = normalized({seed[0] - dot * n[0], seed[1] - dot * n[1], seed[2] - dot * n[2]});
  const Vec3 e2{n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2], n[0] * e1[1] - n[1] * e1[0]};
  return {e1, e2};
}

}  // namespace

std::vector<Matrix> ggm_basis(std::size_t d) {
  if (d < 2 || d > 8) throw std::invalid_argument("ggm_basis: d must lie in [2, 8], got " + std::to_string(d));
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> out;
  out.reserve(d * d - 1);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      Matrix m(d, d);
      m(j, k) = m(k, j) = s;
      out.push_back(std::move(m));
    }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      Matrix m(d, d);
      m(j, k) = complex(0.0, -s);
      m(k, j) = complex(0.0, s);
      out.push_back(std::move(m));
    }
  for (std::size_t l = 1; l < d; ++l) {
    Matrix m(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (std::size_t j = 0; j < l; ++j) m(j, j) = norm;
    m(l, l) = -static_cast<double>(l) * norm;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> pauli_pauli_basis() {
  const auto x = pauli_over_sqrt2();
  std::array<Matrix, 4> sigma{Matrix::identity(2), x[0] * std::sqrt(2.0), x[1] * std::sqrt(2.0),
                              x[2] * std::sqrt(2.0)};
  std::vector<Matrix> out;
  for (std::size_t j = 1; j < 16; ++j) out.push_back(kron(sigma[j / 4], sigma[j % 4]) * 0.5);
  return out;
}

std::string_view to_string(BasisTag tag) { return tag == BasisTag::pauli_pauli ? "pauli_pauli" : "ggm"; }

std::array<std::array<double, 3>, 3> BlochForm::ttt() const {
  std::array<std::array<double, 3>, 3> out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < t[i].size(); ++j) out[i][k] += t[i][j] * t[k][j];
  return out;
}

BlochForm bloch_decompose(const DensityMatrix& rho, BasisTag basis) {
  require_qubit_first(rho, "bloch_decompose");
  if (rho.subsystem_count() != 2) throw std::invalid_argument("bloch_decompose: expected dims [2, d]");
  const std::size_t d = rho.dims()[1];
  if (basis == BasisTag::pauli_pauli && d != 4)
    throw std::invalid_argument("bloch_decompose: the Pauli (x) Pauli basis needs d = 4");
  const std::vector<Matrix> ys = basis == BasisTag::ggm ? ggm_basis(d) : pauli_pauli_basis();

  BlochForm out;
  out.d = d;
  out.basis = basis;
  const auto r = qubit_contractions(rho);
  // Tr_B-side contraction for y: Tr_A[(I/sqrt2 (x) I) rho] = rho_B / sqrt2.
  const std::size_t keep_b[] = {1};
  const Matrix rho_b = partial_trace(rho, keep_b).matrix() * (1.0 / std::sqrt(2.0));
  for (std::size_t i = 0; i < 3; ++i) {
    out.x[i] = r[i].trace().real() / std::sqrt(static_cast<double>(d));
    out.t[i].resize(ys.size());
    for (std::size_t j = 0; j < ys.size(); ++j) out.t[i][j] = trace_product_real(ys[j], r[i]);
  }
  out.y.resize(ys.size());
  for (std::size_t j = 0; j < ys.size(); ++j) out.y[j] = trace_product_real(ys[j], rho_b);
  return out;
}

DensityMatrix reconstruct(const BlochForm& form) {
  const std::size_t d = form.d;
  const std::vector<Matrix> ys = form.basis == BasisTag::ggm ? ggm_basis(d) : pauli_pauli_basis();
  const auto x = pauli_over_sqrt2();
  const Matrix id_b = Matrix::identity(d);
  const Matrix id_a = Matrix::identity(2);
  Matrix m = Matrix::identity(2 * d) * (1.0 / (2.0 * static_cast<double>(d)));
  for (std::size_t i = 0; i < 3; ++i) m += kron(x[i], id_b) * (form.x[i] / std::sqrt(static_cast<double>(d)));
  for (std::size_t j = 0; j < ys.size(); ++j) {
    m += kron(id_a, ys[j]) * (form.y[j] / std::sqrt(2.0));
    for (std::size_t i = 0; i < 3; ++i)
      if (form.t[i][j] != 0.0) m += kron(x[i], ys[j]) * form.t[i][j];
  }
  return DensityMatrix(std::move(m), {2, d});
}

LuoFuBranches luo_fu_branches(const DensityMatrix& rho) {
  require_qubit_first(rho, "min_luo_fu");
  const std::size_t d = rho.side() / 2;
  const auto r = qubit_contractions(rho);
  std::array<double, 3> x{};
  std::array<double, 3> tr{};
  for (std::size_t i = 0; i < 3; ++i) {
    tr[i] = r[i].trace().real();
    x[i] = tr[i] / std::sqrt(static_cast<double>(d));
  }
  // Gram matrix of the B-side components: TT^t without building a basis.
  std::array<std::array<double, 3>, 3> g{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i; k < 3; ++k)
      g[i][k] = g[k][i] = trace_product_real(r[i], r[k]) - tr[i] * tr[k] / static_cast<double>(d);
  return branches_from(x, g);
}

double min_luo_fu(const DensityMatrix& rho) { return luo_fu_branches(rho).value(); }

double min_luo_fu(const BlochForm& form) { return branches_from(form.x, form.ttt()).value(); }

double measurement_disturbance(const DensityMatrix& rho, const std::array<double, 3>& n) {
  require_qubit_first(rho, "measurement_disturbance");
  const std::size_t d = rho.side() / 2;
  // |u> and |v> are the eigenvectors of n.sigma with eigenvalues +1 and -1.
  std::array<complex, 2> u, v;
  if (1.0 + n[2] > 1e-12) {
    const double norm = std::sqrt(2.0 * (1.0 + n[2]));
    u = {complex(1.0 + n[2], 0.0) / norm, complex(n[0], n[1]) / norm};
    v = {complex(-n[0], n[1]) / norm, complex(1.0 + n[2], 0.0) / norm};
  } else {
    u = {0.0, 1.0};
    v = {1.0, 0.0};
  }
  // ||rho - Pi(rho)||^2 = 2 ||<u| rho |v>||^2 with the bracket taken on the qubit.
  const Matrix& m = rho.matrix();
  double sum = 0.0;
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t b2 = 0; b2 < d; ++b2) {
      complex z = 0.0;
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t a2 = 0; a2 < 2; ++a2) z += std::conj(u[a]) * v[a2] * m(a * d + b, a2 * d + b2);
      sum += std::norm(z);
    }
  return 2.0 * sum;
}

double min_brute_force(const DensityMatrix& rho, std::size_t n_grid) {
  require_qubit_first(rho, "min_brute_force");
  if (n_grid < 1000) throw std::invalid_argument("min_brute_force: n_grid must be at least 1000");
  const std::size_t d = rho.side() / 2;
  const auto r = qubit_contractions(rho);
  Vec3 x{};
  for (std::size_t i = 0; i < 3; ++i) x[i] = r[i].trace().real() / std::sqrt(static_cast<double>(d));
  const double x_norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (x_norm > kBlochXTol) return measurement_disturbance(rho, normalized(x));

  const auto f = [&rho](const Vec3& n) { return measurement_disturbance(rho, n); };

  Vec3 best{0.0, 0.0, 1.0};
  double best_value = -1.0;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < n_grid; ++k) {
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n_grid);
    const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(k);
    const Vec3 n{rad * std::cos(phi), rad * std::sin(phi), z};
    const double value = f(n);
    if (value > best_value) {
      best_value = value;
      best = n;
    }
  }

  // Coordinate golden-section sweeps in a local chart around the best point,
  // repeated in a second, narrower chart.
  double half_width = 2.0 * std::sqrt(4.0 * std::numbers::pi / static_cast<double>(n_grid));
  for (int round = 0; round < 2; ++round) {
    const auto [e1, e2] = tangent_frame(best);
    const Vec3 center = best;
    const auto at = [&](double a, double b) {
      return normalized({center[0] + a * e1[0] + b * e2[0], center[1] + a * e1[1] + b * e2[1],
                         center[2] + a * e1[2] + b * e2[2]});
    };
    double a = 0.0, b = 0.0;
    for (int sweep = 0; sweep < 50; ++sweep) {
      const double before = best_value;
      a = golden_max([&](double s) { return f(at(s, b)); }, -half_width, half_width, 1e-10);
      b = golden_max([&](double s) { return f(at(a, s)); }, -half_width, half_width, 1e-10);
      const double value = f(at(a, b));
      if (value > best_value) {
        best_value = value;
        best = at(a, b);
      }
      if (best_value - before < 1e-15) break;
    }
    half_width *= 0.1;
  }
  return best_value;
}

double min_qubit_support(const DensityMatrix& rho, std::size_t side_a) {
  if (side_a == 0 || side_a >= rho.subsystem_count())
    throw std::invalid_argument("min_qubit_support: side_a must leave both sides nonempty");
  std::vector<std::size_t> keep_a(side_a);
  for (std::size_t k = 0; k < side_a; ++k) keep_a[k] = k;
  const Eigensystem marginal = eigh(partial_trace(rho, keep_a).matrix());

  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < marginal.values.size(); ++k)
    if (marginal.values[k] > 1e-10) support.push_back(k);
  if (support.size() != 2)
    throw std::domain_error("min_qubit_support: marginal support has dimension " + std::to_string(support.size()) +
                            ", expected 2");

  const std::size_t da = marginal.values.size();
  const std::size_t db = rho.side() / da;
  const Matrix& m = rho.matrix();
  // rho' = (V^dagger (x) I) rho (V (x) I) with V the 2-column support isometry.
  Matrix half(2 * db, rho.side());
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t a = 0; a < da; ++a) {
      const complex v = std::conj(marginal.vectors(a, support[s]));
      if (v == 0.0) continue;
      for (std::size_t b = 0; b < db; ++b)
        for (std::size_t c = 0; c < rho.side(); ++c) half(s * db + b, c) += v * m(a * db + b, c);
    }
  Matrix out(2 * db, 2 * db);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t a = 0; a < da; ++a) {
      const complex v = marginal.vectors(a, support[s]);
      if (v == 0.0) continue;
      for (std::size_t r = 0; r < 2 * db; ++r)
        for (std::size_t b = 0; b < db; ++b) out(r, s * db + b) += half(r, a * db + b) * v;
    }
  return min_luo_fu(DensityMatrix(std::move(out), {2, db}));
}

std::string_view to_string(MinFamily family) {
  switch (family) {
    case MinFamily::c1c2_dim4: return "c1c2_dim4";
    case MinFamily::c1r2_dim4: return "c1r2_dim4";
    case MinFamily::global: return "global";
    case MinFamily::c1c2_dim6: return "c1c2_dim6";
    case MinFamily::c1c2_dim8: return "c1c2_dim8";
    case MinFamily::initial: return "initial";
  }
  return "unknown";
}

MinFamily min_family_from_string(std::string_view name) {
  for (auto f : {MinFamily::c1c2_dim4, MinFamily::c1r2_dim4, MinFamily::global, MinFamily::c1c2_dim6,
                 MinFamily::c1c2_dim8, MinFamily::initial})
    if (to_string(f) == name) return f;
  throw std::invalid_argument("unknown MIN closed form '" + std::string(name) + "'");
}

double min_closed_form(MinFamily family, double p, const ChannelParams& params) {
  require_probability(p, "min_closed_form");
  const double q = 1.0 - p;
  const double x2 = params.xi * params.xi, x4 = x2 * x2, x8 = x4 * x4, x12 = x8 * x4, x16 = x8 * x8,
               x20 = x16 * x4, x24 = x12 * x12;
  const double c2 = params.chi * params.chi, c4 = c2 * c2, c8 = c4 * c4, c12 = c8 * c4, c16 = c8 * c8,
               c20 = c16 * c4, c24 = c12 * c12;
  switch (family) {
    case MinFamily::c1c2_dim4: {
      const double f = x8 + 6.0 * x4 * c4 + 3.0 * c8;
      const double g = kSqrt3 * c4;
      return 0.5 * x4 * (f - 2.0 * p * (f - g) + p * p * (1.0 - 2.0 * g + f));
    }
    case MinFamily::c1r2_dim4: {
      const double f1 = (3.0 * x8 + 6.0 * x4 * c4 + c8) * q * q;
      return 0.5 * x2 * c2 * (p * p + 2.0 * kSqrt3 * p * q * x4 + f1);
    }
    case MinFamily::global:
    case MinFamily::initial: return 0.5 * (1.0 - 2.0 * p + 2.0 * p * p);
    case MinFamily::c1c2_dim6: {
      const double l1 = 2.0 * q * (kSqrt5 * p + 30.0 * q * x8) * c8;
      const double l2 = q * q * (20.0 * x12 * c4 + 40.0 * x4 * c12 + 5.0 * c16);
      return 0.5 * x4 * (x16 + p * (p - (2.0 - p) * x16) + l1 + l2);
    }
    case MinFamily::c1c2_dim8: {
      const double l3 = p * (p - (2.0 - p) * x24) + 2.0 * q * (kSqrt7 * p + 350.0 * q * x12) * c12;
      const double l4 = 42.0 * x20 * c4 + 315.0 * x16 * c8 + 525.0 * x8 * c16 + 126.0 * x4 * c20 + 7.0 * c24;
      return 0.5 * x4 * (x24 + l3 + q * q * l4);
    }
  }
  throw std::invalid_argument("min_closed_form: unknown family");
}

double min_closed_form(MinFamily family, double p, double kappa_t) {
  return min_closed_form(family, p, damping_amplitudes(kappa_t));
}

ContinuityReport min_continuity_check(double p) {
  require_probability(p, "min_continuity_check");
  std::vector<double> values;
  for (int k = 2; k <= 7; ++k) values.push_back(min_closed_form(MinFamily::c1c2_dim4, p, std::pow(10.0, -k)));
  // Leading correction is linear in kappa_t; one Richardson step on the two
  // smallest times removes it.
  const double fine = values.back(), coarse = values[values.size() - 2];
  ContinuityReport out;
  out.limit_value = (10.0 * fine - coarse) / 9.0;
  out.value_at_zero = min_closed_form(MinFamily::initial, p, 0.0);
  out.gap = std::abs(out.limit_value - out.value_at_zero);
  return out;
}

PurityRelation min_initial_purity_relation(double p, Family family) {
  const DensityMatrix rho = build_mmes(MmesSpec::for_family(family, p));
  return {min_luo_fu(rho), 0.5 * purity(rho)};
}

}  // namespace mmes
