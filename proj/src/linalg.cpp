#include "qproc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qproc/error.hpp"

namespace qproc {

namespace {

void require_square(const CMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw ShapeError(std::string(op) + ": expected a square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("CMatrix: " + std::to_string(entries_.size()) + " entries for a " +
                     std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("CMatrix: non-finite entry", std::abs(z));
    }
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("CMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

CMatrix mat_power(const CMatrix& a, unsigned k) {
  require_square(a, "mat_power");
  CMatrix result = CMatrix::identity(a.rows());
  CMatrix base = a;
  while (k > 0) {
    if (k & 1u) result = matmul(result, base);
    k >>= 1u;
    if (k > 0) base = matmul(base, base);
  }
  return result;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "operator+");
  CMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "operator-");
  CMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

CMatrix operator*(Complex scale, const CMatrix& a) {
  CMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= scale;
  return c;
}

Complex trace(const CMatrix& a) {
  require_square(a, "trace");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_norm(const CMatrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double unitarity_residual(const CMatrix& a) {
  require_square(a, "is_unitary");
  return max_norm(matmul(a, adjoint(a)) - CMatrix::identity(a.rows()));
}

bool is_unitary(const CMatrix& a, double tol) { return unitarity_residual(a) <= tol; }

bool is_hermitian(const CMatrix& a, double tol) {
  require_square(a, "is_hermitian");
  return max_norm(a - adjoint(a)) <= tol;
}

double projector_residual(const CMatrix& a) {
  require_square(a, "is_projector");
  return std::max(max_norm(a - adjoint(a)), max_norm(matmul(a, a) - a));
}

bool is_projector(const CMatrix& a, double tol) { return projector_residual(a) <= tol; }

std::vector<double> hermitian_eigenvalues(const CMatrix& a, double tol) {
  require_square(a, "hermitian_eigenvalues");
  const std::size_t n = a.rows();
  if (n > 64) throw ShapeError("hermitian_eigenvalues: dimension " + std::to_string(n) + " > 64");
  const double herm = max_norm(a - adjoint(a));
  if (herm > tol) {
    throw ValidationError("hermitian_eigenvalues: matrix is not Hermitian (residual " +
                              std::to_string(herm) + ")",
                          herm);
  }

  // A = X + iY maps to the real symmetric [[X, -Y], [Y, X]], whose spectrum is
  // that of A with every eigenvalue repeated twice.
  const std::size_t m = 2 * n;
  std::vector<double> s(m * m);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return s[i * m + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Symmetrize so roundoff in the input cannot break the embedding.
      const Complex z = 0.5 * (a(i, j) + std::conj(a(j, i)));
      at(i, j) = z.real();
      at(i + n, j + n) = z.real();
      at(i, j + n) = -z.imag();
      at(i + n, j) = z.imag();
    }
  }

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      diag += at(i, i) * at(i, i);
      for (std::size_t j = i + 1; j < m; ++j) off += at(i, j) * at(i, j);
    }
    if (off <= 1e-30 * std::max(diag, 1e-300)) break;

    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - sn * akq;
          at(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - sn * aqk;
          at(q, k) = sn * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> doubled(m);
  for (std::size_t i = 0; i < m; ++i) doubled[i] = at(i, i);
  std::sort(doubled.begin(), doubled.end(), std::greater<>());
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = doubled[2 * i];
  return eig;
}

}  // namespace qproc
