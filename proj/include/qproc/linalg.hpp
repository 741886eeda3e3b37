#pragma once

// Small dense complex matrices. Everything here is sized for |Q| up to a few
// tens; there is no blocking or vectorization.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qproc {

using Complex = std::complex<double>;

inline constexpr double kStructuralTol = 1e-9;

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-major nested initializer; all rows must have the same length.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols);
  static CMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
CMatrix mat_power(const CMatrix& a, unsigned k);

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex scale, const CMatrix& a);
inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

Complex trace(const CMatrix& a);

/// Largest entry modulus.
double max_norm(const CMatrix& a);

/// ‖a·a† − I‖_max ≤ tol.
bool is_unitary(const CMatrix& a, double tol = kStructuralTol);
double unitarity_residual(const CMatrix& a);

bool is_hermitian(const CMatrix& a, double tol = kStructuralTol);

/// Hermitian and idempotent, both in max norm.
bool is_projector(const CMatrix& a, double tol = kStructuralTol);
double projector_residual(const CMatrix& a);

/// Eigenvalues of a Hermitian matrix in descending order (cyclic Jacobi on
/// the real symmetric embedding). Throws ValidationError if `a` is not
/// Hermitian within `tol`.
std::vector<double> hermitian_eigenvalues(const CMatrix& a, double tol = kStructuralTol);

}  // namespace qproc
