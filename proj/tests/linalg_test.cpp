#include "qproc/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <gtest/gtest.h>

#include "qproc/builtins.hpp"
#include "qproc/error.hpp"
#include "test_support.hpp"

using namespace qproc;
using namespace qproc::testing;

TEST(Linalg, MatmulIdentityAndHadamard) {
  const CMatrix h = hadamard_by_hand();
  EXPECT_MATRIX_NEAR(matmul(CMatrix::identity(2), h), h, kEq);
  EXPECT_MATRIX_NEAR(matmul(h, h), CMatrix::identity(2), kEq);
}

TEST(Linalg, MatmulSpinUnitaryWithDiagonalProjector) {
  const CMatrix expected = {{kR, 0.0, 0.0}, {0.0, 0.0, -1.0}, {-kR, 0.0, 0.0}};
  EXPECT_MATRIX_NEAR(matmul(spin1_unitary_by_hand(), diag({1, 0, 1})), expected, kEq);
}

TEST(Linalg, MatmulShapeMismatchThrows) {
  EXPECT_THROW(matmul(CMatrix(2, 3), CMatrix(2, 3)), ShapeError);
}

TEST(Linalg, Adjoint) {
  EXPECT_EQ(adjoint(CMatrix::identity(3)), CMatrix::identity(3));
  EXPECT_EQ(adjoint(hadamard_by_hand()), hadamard_by_hand());
  const CMatrix jy = builtins::spin1_jy();
  EXPECT_EQ(adjoint(jy), jy);
  EXPECT_EQ(jy(0, 2), Complex(0.0, 1.0));
}

TEST(Linalg, MatPower) {
  EXPECT_MATRIX_NEAR(mat_power(hadamard_by_hand(), 2), CMatrix::identity(2), kEq);
  EXPECT_EQ(mat_power(spin1_unitary_by_hand(), 0), CMatrix::identity(3));
  EXPECT_EQ(mat_power(spin1_unitary_by_hand(), 1), spin1_unitary_by_hand());
  EXPECT_THROW(mat_power(CMatrix(2, 3), 2), ShapeError);
}

TEST(Linalg, MatPowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(11);
  const CMatrix a = random_matrix(rng, 4, 4);
  CMatrix p = CMatrix::identity(4);
  for (unsigned k = 0; k <= 7; ++k) {
    EXPECT_LE(max_norm(mat_power(a, k) - p), 1e-9 * std::max(1.0, max_norm(p)));
    p = matmul(p, a);
  }
}

TEST(Linalg, UnitarityPredicate) {
  EXPECT_TRUE(is_unitary(hadamard_by_hand(), 1e-9));
  EXPECT_TRUE(is_unitary(spin1_unitary_by_hand(), 1e-9));
  EXPECT_FALSE(is_unitary(diag({1, 0}), 1e-9));
}

TEST(Linalg, ProjectorPredicate) {
  EXPECT_TRUE(is_projector(diag({1, 0, 1}), 1e-9));
  EXPECT_TRUE(is_projector(CMatrix::identity(4), 1e-9));
  EXPECT_FALSE(is_projector(hadamard_by_hand(), 1e-9));
  // Idempotent but not Hermitian.
  EXPECT_FALSE(is_projector(CMatrix{{1.0, 1.0}, {0.0, 0.0}}, 1e-9));
}

TEST(Linalg, HermitianEigenvaluesSmallCases) {
  auto near = [](const std::vector<double>& got, const std::vector<double>& want) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
  };
  near(hermitian_eigenvalues(diag({0.5, 0.5})), {0.5, 0.5});
  near(hermitian_eigenvalues(diag({1.0 / 3, 1.0 / 3, 1.0 / 3})), {1.0 / 3, 1.0 / 3, 1.0 / 3});
  near(hermitian_eigenvalues(Complex(0.5) * CMatrix{{1.0, 1.0}, {1.0, 1.0}}), {1.0, 0.0});
  near(hermitian_eigenvalues(builtins::spin1_jz()), {1.0, 0.0, -1.0});
}

TEST(Linalg, HermitianEigenvaluesRejectsNonHermitian) {
  EXPECT_THROW(hermitian_eigenvalues(CMatrix{{0.0, 1.0}, {0.0, 0.0}}), ValidationError);
  EXPECT_THROW(hermitian_eigenvalues(CMatrix::identity(65)), ShapeError);
}

TEST(Linalg, HermitianEigenvaluesAgreeWithEigen) {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 33u}) {
    const CMatrix a = random_hermitian(rng, n);
    Eigen::MatrixXcd e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = a(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
    std::vector<double> want(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(want.begin(), want.end(), std::greater<>());
    const std::vector<double> got = hermitian_eigenvalues(a);
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(got[i], want[i], 1e-10) << "n=" << n << " i=" << i;
      tr += got[i];
    }
    EXPECT_NEAR(tr, trace(a).real(), 1e-9);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), std::greater<>()));
  }
}

TEST(LinalgProperty, MatmulIsAssociative) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const CMatrix a = random_matrix(rng, n, n + 1);
    const CMatrix b = random_matrix(rng, n + 1, n + 2);
    const CMatrix c = random_matrix(rng, n + 2, n);
    EXPECT_LE(max_norm(matmul(matmul(a, b), c) - matmul(a, matmul(b, c))), 1e-12 * 100);
  }
}

TEST(LinalgProperty, AdjointIsAnInvolution) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix a = random_matrix(rng, 1 + trial % 5, 1 + trial % 7);
    EXPECT_EQ(adjoint(adjoint(a)), a);
  }
}

TEST(LinalgProperty, PowersOfUnitariesStayUnitary) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = random_unitary(rng, 2 + trial % 5);
    ASSERT_TRUE(is_unitary(u, 1e-9));
    for (unsigned k = 0; k <= 8; ++k) EXPECT_TRUE(is_unitary(mat_power(u, k), 1e-9)) << k;
  }
}

TEST(LinalgProperty, ProjectorSpectrumIsZeroOrOne) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const CMatrix p = random_projector(rng, n, trial % (n + 1));
    ASSERT_TRUE(is_projector(p, 1e-9));
    for (double lambda : hermitian_eigenvalues(p)) {
      EXPECT_LE(std::min(std::abs(lambda), std::abs(lambda - 1.0)), 1e-9);
    }
  }
}
