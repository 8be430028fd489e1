#include "mmes/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mmes {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::projector(std::span<const complex> ket) {
  const std::size_t n = ket.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

complex Matrix::trace() const {
  if (!square()) throw std::invalid_argument("Matrix::trace: matrix is not square");
  complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("Matrix::operator+=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("Matrix::operator-=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, complex scale) { return a *= scale; }
Matrix operator*(complex scale, Matrix a) { return a *= scale; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const complex aik = a(i, k);
      if (aik == complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

double hermiticity_defect(const Matrix& m) {
  if (!m.square()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

// Flat offsets of every joint configuration of `subset`, first listed
// subsystem most significant.
std::vector<std::size_t> offsets_for(std::span<const std::size_t> dims, std::span<const std::size_t> subset) {
  const auto strides = strides_of(dims);
  std::vector<std::size_t> out{0};
  for (std::size_t idx : subset) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[idx]);
    for (std::size_t base : out)
      for (std::size_t d = 0; d < dims[idx]; ++d) next.push_back(base + d * strides[idx]);
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> checked_subset(std::span<const std::size_t> dims, std::span<const std::size_t> subset,
                                        const char* where) {
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(std::string(where) + ": repeated subsystem index");
  for (std::size_t idx : sorted)
    if (idx >= dims.size())
      throw std::invalid_argument(std::string(where) + ": subsystem index " + std::to_string(idx) + " out of range");
  return sorted;
}

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> sorted_subset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(sorted_subset.begin(), sorted_subset.end(), i)) out.push_back(i);
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix data, std::vector<std::size_t> dims, std::vector<std::string> labels)
    : data_(std::move(data)), dims_(std::move(dims)), labels_(std::move(labels)) {
  if (!data_.square()) throw std::invalid_argument("DensityMatrix: matrix is not square");
  if (dims_.empty()) throw std::invalid_argument("DensityMatrix: empty dimension list");
  if (std::find(dims_.begin(), dims_.end(), std::size_t{0}) != dims_.end())
    throw std::invalid_argument("DensityMatrix: zero subsystem dimension");
  if (product(dims_) != data_.rows())
    throw std::invalid_argument("DensityMatrix: product of dims " + std::to_string(product(dims_)) +
                                " does not match side " + std::to_string(data_.rows()));
  if (!labels_.empty() && labels_.size() != dims_.size())
    throw std::invalid_argument("DensityMatrix: label count does not match subsystem count");
}

void DensityMatrix::require_physical() const {
  if (hermiticity_defect(data_) > kHermitianTol) throw std::domain_error("state is not Hermitian");
  const complex tr = data_.trace();
  if (std::abs(tr - 1.0) > kStateTol) throw std::domain_error("state trace differs from 1");
  if (eigvals_hermitian(data_).min() < -kStateTol) throw std::domain_error("state has a negative eigenvalue");
}

double Spectrum::sum() const { return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0); }

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  }
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims), std::move(labels));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: nothing to keep");
  const auto& dims = rho.dims();
  const auto kept = checked_subset(dims, keep, "partial_trace");
  const auto traced = complement(dims.size(), kept);
  const auto ko = offsets_for(dims, kept);
  const auto to = offsets_for(dims, traced);

  const Matrix& m = rho.matrix();
  Matrix out(ko.size(), ko.size());
  for (std::size_t a = 0; a < ko.size(); ++a)
    for (std::size_t b = 0; b < ko.size(); ++b) {
      complex acc = 0.0;
      for (std::size_t t : to) acc += m(ko[a] + t, ko[b] + t);
      out(a, b) = acc;
    }

  std::vector<std::size_t> out_dims;
  std::vector<std::string> out_labels;
  for (std::size_t idx : kept) {
    out_dims.push_back(dims[idx]);
    if (!rho.labels().empty()) out_labels.push_back(rho.labels()[idx]);
  }
  return DensityMatrix(std::move(out), std::move(out_dims), std::move(out_labels));
}

Matrix partial_trace_pure(std::span<const complex> ket, std::span<const std::size_t> dims,
                          std::span<const std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace_pure: nothing to keep");
  if (product(dims) != ket.size()) throw std::invalid_argument("partial_trace_pure: ket length does not match dims");
  const auto kept = checked_subset(dims, keep, "partial_trace_pure");
  const auto traced = complement(dims.size(), kept);
  const auto ko = offsets_for(dims, kept);
  const auto to = offsets_for(dims, traced);

  Matrix out(ko.size(), ko.size());
  for (std::size_t a = 0; a < ko.size(); ++a)
    for (std::size_t b = a; b < ko.size(); ++b) {
      complex acc = 0.0;
      for (std::size_t t : to) acc += ket[ko[a] + t] * std::conj(ket[ko[b] + t]);
      out(a, b) = acc;
      out(b, a) = std::conj(acc);
    }
  return out;
}

DensityMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  const std::size_t one[] = {subsystem};
  return partial_transpose(rho, one);
}

DensityMatrix partial_transpose(const DensityMatrix& rho, std::span<const std::size_t> subsystems) {
  const auto& dims = rho.dims();
  const auto flipped = checked_subset(dims, subsystems, "partial_transpose");
  const auto rest = complement(dims.size(), flipped);
  const auto ko = offsets_for(dims, rest);
  const auto so = offsets_for(dims, flipped);

  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (std::size_t a : ko)
    for (std::size_t b : ko)
      for (std::size_t s1 : so)
        for (std::size_t s2 : so) out(a + s2, b + s1) = m(a + s1, b + s2);
  return DensityMatrix(std::move(out), dims, rho.labels());
}

DensityMatrix permute_subsystems(const DensityMatrix& rho, std::span<const std::size_t> order) {
  const auto& dims = rho.dims();
  if (order.size() != dims.size()) throw std::invalid_argument("permute_subsystems: order must list every subsystem");
  checked_subset(dims, order, "permute_subsystems");
  const auto off = offsets_for(dims, order);

  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < off.size(); ++i)
    for (std::size_t j = 0; j < off.size(); ++j) out(i, j) = m(off[i], off[j]);

  std::vector<std::size_t> new_dims;
  std::vector<std::string> new_labels;
  for (std::size_t idx : order) {
    new_dims.push_back(dims[idx]);
    if (!rho.labels().empty()) new_labels.push_back(rho.labels()[idx]);
  }
  return DensityMatrix(std::move(out), std::move(new_dims), std::move(new_labels));
}

Eigensystem eigh(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("eigh: matrix is not square");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol)
    throw std::invalid_argument("eigh: matrix is not Hermitian (defect " + std::to_string(defect) + ")");

  const std::size_t n = m.rows();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  Matrix v = Matrix::identity(n);

  double fro_sq = 0.0;
  for (const auto& z : a.data()) fro_sq += std::norm(z);
  const double target = 1e-13 * std::sqrt(fro_sq);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off_sq = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off_sq += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off_sq) <= target) break;

    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const complex phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Real Jacobi rotation on the phase-aligned 2x2 block.
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const complex u_pq = s * phase;
        const complex u_qp = -s * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const complex akp = a(k, p);
          const complex akq = a(k, q);
          a(k, p) = akp * c + akq * u_qp;
          a(k, q) = akp * u_pq + akq * c;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const complex apk = a(p, k);
          const complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const complex vkp = v(k, p);
          const complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * c;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  Eigensystem out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

Spectrum eigvals_hermitian(const Matrix& m) { return Spectrum{eigh(m).values}; }

double trace_norm(const Matrix& m) {
  double total = 0.0;
  for (double ev : eigvals_hermitian(m).eigenvalues) total += std::abs(ev);
  return total;
}

double hs_norm_sq(const Matrix& m) {
  // tr(X^dagger X) is the squared Frobenius norm.
  double total = 0.0;
  for (const auto& z : m.data()) total += std::norm(z);
  return total;
}

double purity(const DensityMatrix& rho) { return hs_norm_sq(rho.matrix()); }

}  // namespace mmes
