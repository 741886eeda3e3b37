#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qproc/generator.hpp"

namespace qproc {

/// Dense real square matrix, row-major.
struct RealMatrix {
  std::size_t dim = 0;
  std::vector<double> entries;

  explicit RealMatrix(std::size_t n = 0) : dim(n), entries(n * n, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
  bool operator==(const RealMatrix&) const = default;
};

/// Symbol-labeled sub-stochastic matrices T(s) with a stationary row vector.
/// A plain aggregate so that callers can perturb it; `validate` checks the
/// stochastic invariants.
struct ClassicalGenerator {
  std::size_t dim = 0;
  std::vector<std::string> alphabet;
  std::vector<RealMatrix> matrices;
  std::vector<double> stationary;

  /// Throws ValidationError if entries are negative, Σ_s T(s) is not
  /// row-stochastic, or π is not a stationary probability vector (1e-9).
  void validate() const;
};

/// T_ij(s) = |U_ij|² when basis state j lies in the support of P(s), else 0;
/// π uniform. Requires a deterministic generator with diagonal projectors.
ClassicalGenerator classical_equivalent(const QuantumGenerator& g);

/// π · T(s₁)⋯T(s_L) · 1.
double classical_word_probability(const ClassicalGenerator& cg, const Word& word);

/// Max |Pr_quantum(w) − Pr_classical(w)| over every word of length ≤ L,
/// with uniform initial conditions on both sides.
double verify_equivalence(const QuantumGenerator& g, const ClassicalGenerator& cg,
                          std::size_t L);

}  // namespace qproc
