#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qproc/linalg.hpp"

namespace qproc {

/// Index of a measurement outcome within a generator's alphabet.
using SymbolIndex = std::uint8_t;
/// A measurement-outcome sequence, as alphabet indices.
using Word = std::vector<SymbolIndex>;

inline constexpr std::size_t kMaxAlphabet = 255;

/// Finite-state quantum generator {U, P(s)}: one unitary step followed by a
/// complete, orthogonal projective measurement. Immutable once built.
class QuantumGenerator {
 public:
  /// Validates every invariant and throws ValidationError (carrying the
  /// offending residual) or ShapeError on failure.
  static QuantumGenerator build(CMatrix unitary, std::vector<CMatrix> projectors,
                                std::vector<std::string> alphabet, std::string name);

  std::size_t dim() const noexcept { return unitary_.rows(); }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const CMatrix& unitary() const noexcept { return unitary_; }
  const CMatrix& projector(SymbolIndex s) const { return projectors_.at(s); }
  const std::vector<CMatrix>& projectors() const noexcept { return projectors_; }
  const std::string& name() const noexcept { return name_; }

  /// Index of a symbol label; throws std::out_of_range if unknown.
  SymbolIndex symbol_index(std::string_view label) const;

  /// T(s) = U·P(s).
  const CMatrix& transition_matrix(SymbolIndex s) const;
  const CMatrix& transition_matrix(std::string_view label) const {
    return transition_matrix(symbol_index(label));
  }

 private:
  QuantumGenerator() = default;

  CMatrix unitary_;
  std::vector<CMatrix> projectors_;
  std::vector<CMatrix> transitions_;
  std::vector<std::string> alphabet_;
  std::string name_;
};

enum class Act : std::uint8_t { Measure, Skip };

/// Periodic pattern of measure/skip acts. A Skip applies U with the identity
/// projector; a Measure applies U followed by a projective measurement.
class MeasurementProtocol {
 public:
  /// Throws std::invalid_argument for an empty pattern or one with no Measure.
  explicit MeasurementProtocol(std::vector<Act> pattern);

  /// Parses "M", "SM", "SSM", ...
  static MeasurementProtocol parse(std::string_view pattern);

  const std::vector<Act>& pattern() const noexcept { return pattern_; }
  std::size_t period() const noexcept { return pattern_.size(); }
  std::size_t measures_per_period() const noexcept;
  std::string to_string() const;

  bool operator==(const MeasurementProtocol&) const = default;

 private:
  std::vector<Act> pattern_;
};

/// Row state vector ⟨ψ|. May be un-normalized; its squared norm is then a
/// probability.
struct StateVector {
  std::vector<Complex> amplitudes;

  static StateVector basis(std::size_t dim, std::size_t index);
  double norm_squared() const;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity (all within 1e-9).
  explicit DensityMatrix(CMatrix rho);

  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix pure(const StateVector& psi);

  const CMatrix& matrix() const noexcept { return rho_; }
  std::size_t dim() const noexcept { return rho_.rows(); }

 private:
  CMatrix rho_;
};

/// Generator observed once per protocol period. Only Skip^(k-1)·Measure
/// patterns are accepted; the result has unitary U^k and the same projectors.
QuantumGenerator effective_generator(const QuantumGenerator& g,
                                     const MeasurementProtocol& protocol);

/// True iff every T(s) has at most one entry of modulus > zero_tol per row.
bool is_deterministic(const QuantumGenerator& g, double zero_tol = kStructuralTol);

/// (1/dim)·I, verified to be a fixed point of ρ ↦ Σ_s T(s)†ρT(s).
/// Throws UnsupportedError for nondeterministic generators and
/// NumericalError if the verification fails.
DensityMatrix stationary_density(const QuantumGenerator& g);

/// Number of closed communicating classes of the transition graph
/// i → j iff |U_ij|² > tol. 1 means the classical skeleton is irreducible.
std::size_t ergodic_components(const QuantumGenerator& g, double tol = kStructuralTol);

}  // namespace qproc
