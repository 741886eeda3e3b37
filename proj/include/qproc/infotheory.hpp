#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qproc/generator.hpp"
#include "qproc/process.hpp"

namespace qproc {

/// Block entropies H(0..L_max) in bits, H(0) = 0.
struct EntropyCurve {
  std::vector<double> H;

  std::size_t l_max() const noexcept { return H.empty() ? 0 : H.size() - 1; }
};

/// Shannon entropy in bits; 0·log 0 = 0. Rejects distributions whose total
/// differs from 1 by more than 1e-6.
double block_entropy(const WordDistribution& d);

/// H(L) for L = 0..l_max in a single enumeration pass.
EntropyCurve block_entropy_curve(const QuantumGenerator& g, const InitialCondition& init,
                                 std::size_t l_max, const EnumerationOptions& options = {});

/// ΔH(L) = H(L) − H(L−1) for L = 1..l_max; the last element estimates h_μ.
std::vector<double> entropy_rate_curve(const EntropyCurve& c);

/// −(1/|Q|) Σ_ij |U_ij|² log₂ |U_ij|² for deterministic generators.
double entropy_rate_closed_form(const QuantumGenerator& g);

struct ExcessEntropy {
  double value;
  double residual;  // |E(L_max) − E(L_max−1)|
};

/// E = H(L_max) − h_μ·L_max.
ExcessEntropy excess_entropy(const EntropyCurve& c, double h_mu);

struct TransientInformation {
  double value;
  double tail;  // 2 × last summand; a heuristic, not a bound
};

/// Σ_{L=0}^{L_max} [E + h_μ·L − H(L)].
TransientInformation transient_information(const EntropyCurve& c, double h_mu, double E);

/// −Σ λ log₂ λ over the spectrum of ρ.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(ρ^{⊗L})/L, which equals S(ρ) by additivity. Requires L ≥ 1.
double density_matrix_rate(const DensityMatrix& rho, std::size_t L);

/// Irreducible forbidden words: words absent from their length's exact
/// distribution whose longest proper prefix and suffix are both present.
/// `dists` is keyed by length and must contain every length from 0 (or 1) up
/// to the largest key.
std::vector<Word> forbidden_words(const std::map<std::size_t, WordDistribution>& dists);

struct AnalyzeOptions {
  EnumerationOptions enumeration;
  std::size_t forbidden_cap = 6;
};

struct InfoReport {
  std::string name;
  std::vector<std::string> alphabet;
  std::size_t dim = 0;
  std::string protocol;
  bool deterministic = false;
  std::size_t ergodic_components = 0;
  double h_mu = 0.0;  // value used for E and T
  double h_mu_estimate = 0.0;
  std::optional<double> h_mu_closed_form;
  double E = 0.0;
  double T = 0.0;
  double S_q = 0.0;
  EntropyCurve entropy_curve;
  double E_residual = 0.0;
  double T_last_term = 0.0;
  double T_tail = 0.0;
  std::optional<double> h_mu_gap;  // |ΔH(L_max) − closed form|
  std::vector<Word> forbidden_words;
  std::size_t forbidden_cap = 0;
};

/// Full analysis of a generator observed under a S...SM protocol.
/// Deterministic generators use the uniform stationary state and the closed
/// form rate. Nondeterministic generators start from the maximally mixed
/// state, which every complete projective generator leaves invariant, and use
/// ΔH(L_max) as the rate.
InfoReport analyze(const QuantumGenerator& g, const MeasurementProtocol& protocol,
                   std::size_t l_max, const AnalyzeOptions& options = {});

}  // namespace qproc
