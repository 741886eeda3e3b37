#pragma once

// Helpers shared by the unit tests: seeded random matrices and a few
// hand-written reference matrices.

#include <cmath>
#include <complex>
#include <random>

#include "qproc/linalg.hpp"

namespace qproc::testing {

inline constexpr double kEq = 1e-12;
inline const double kR = 1.0 / std::sqrt(2.0);

inline CMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

/// Modified Gram-Schmidt on the rows of a random complex matrix.
inline CMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  CMatrix m = random_matrix(rng, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      Complex dot{};
      for (std::size_t j = 0; j < n; ++j) dot += std::conj(m(k, j)) * m(i, j);
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= dot * m(k, j);
    }
    double norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    for (std::size_t j = 0; j < n; ++j) m(i, j) /= norm;
  }
  return m;
}

inline CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  CMatrix a = random_matrix(rng, n, n);
  return Complex(0.5) * (a + adjoint(a));
}

/// V·diag(1..1, 0..0)·V† with `rank` ones.
inline CMatrix random_projector(std::mt19937_64& rng, std::size_t n, std::size_t rank) {
  const CMatrix v = random_unitary(rng, n);
  CMatrix d(n, n);
  for (std::size_t i = 0; i < rank; ++i) d(i, i) = 1.0;
  return matmul(adjoint(v), matmul(d, v));
}

inline CMatrix diag(std::initializer_list<double> values) {
  std::vector<Complex> d(values.begin(), values.end());
  return CMatrix::diagonal(d);
}

inline CMatrix hadamard_by_hand() { return {{kR, kR}, {kR, -kR}}; }

inline CMatrix spin1_unitary_by_hand() {
  return {{kR, kR, 0.0}, {0.0, 0.0, -1.0}, {-kR, kR, 0.0}};
}

}  // namespace qproc::testing

#define EXPECT_MATRIX_NEAR(a, b, tol)                                           \
  do {                                                                          \
    const ::qproc::CMatrix ma_ = (a);                                           \
    const ::qproc::CMatrix mb_ = (b);                                           \
    ASSERT_EQ(ma_.rows(), mb_.rows());                                          \
    ASSERT_EQ(ma_.cols(), mb_.cols());                                          \
    EXPECT_LE(::qproc::max_norm(ma_ - mb_), (tol)) << "matrices differ";        \
  } while (0)
