#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mmes {

using complex = std::complex<double>;

// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);
  static Matrix projector(std::span<const complex> ket);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<complex> data() { return data_; }
  std::span<const complex> data() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  complex trace() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(complex scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, complex scale);
Matrix operator*(complex scale, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

// Largest |A - A^dagger| element.
double hermiticity_defect(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kStateTol = 1e-10;

// Density operator on an ordered tensor product of subsystems. Subsystems are
// addressed by position; labels are carried along as metadata only.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(Matrix data, std::vector<std::size_t> dims, std::vector<std::string> labels = {});

  const Matrix& matrix() const { return data_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t side() const { return data_.rows(); }
  std::size_t subsystem_count() const { return dims_.size(); }

  // Throws std::domain_error unless Hermitian, unit trace and positive
  // semidefinite within kStateTol.
  void require_physical() const;

 private:
  Matrix data_;
  std::vector<std::size_t> dims_;
  std::vector<std::string> labels_;
};

// Real eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> eigenvalues;

  std::size_t size() const { return eigenvalues.size(); }
  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  double sum() const;
};

// Eigenvalues ascending; column k of `vectors` is the eigenvector of values[k].
struct Eigensystem {
  std::vector<double> values;
  Matrix vectors;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Reduced state on `keep` (subsystem positions, any order on input; the
// result keeps the original relative order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

// Reduced state of the pure vector `ket` over subsystems `dims`.
Matrix partial_trace_pure(std::span<const complex> ket, std::span<const std::size_t> dims,
                          std::span<const std::size_t> keep);

DensityMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);
DensityMatrix partial_transpose(const DensityMatrix& rho, std::span<const std::size_t> subsystems);

// Reorders subsystems so that new position k holds old subsystem order[k].
DensityMatrix permute_subsystems(const DensityMatrix& rho, std::span<const std::size_t> order);

// Cyclic complex Jacobi. Throws std::invalid_argument for non-Hermitian input.
Eigensystem eigh(const Matrix& m);
Spectrum eigvals_hermitian(const Matrix& m);

double trace_norm(const Matrix& m);
double hs_norm_sq(const Matrix& m);
double purity(const DensityMatrix& rho);

}  // namespace mmes
