#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <variant>

#include "qproc/generator.hpp"

namespace qproc {

inline constexpr double kDefaultPruneTol = 1e-12;
inline constexpr std::size_t kDefaultMaxPrefixes = 10'000'000;

using InitialCondition = std::variant<DensityMatrix, StateVector>;

enum class DistributionKind { Exact, Empirical };

/// Probabilities of length-L words. Words not present have probability 0.
/// Iteration order is lexicographic in symbol index.
struct WordDistribution {
  std::size_t length = 0;
  std::size_t alphabet_size = 0;
  DistributionKind kind = DistributionKind::Exact;
  std::size_t sample_count = 0;  // empirical only: number of windows
  std::map<Word, double> probabilities;

  double probability(const Word& w) const;
  double total() const;
};

struct Trajectory {
  Word symbols;
  std::uint64_t seed = 0;
  std::size_t initial_state_index = 0;
};

/// T(s₁)·T(s₂)⋯T(s_L); the empty word maps to I.
CMatrix word_operator(const QuantumGenerator& g, const Word& word);

/// Tr[T(w)† ρ T(w)] or ‖ψ₀·T(w)‖².
double word_probability(const QuantumGenerator& g, const InitialCondition& init, const Word& word);

/// Probability of observing `observed` when the protocol pattern is run from
/// its first act until observed.size() Measure acts have been consumed.
double word_probability_protocol(const QuantumGenerator& g, const MeasurementProtocol& protocol,
                                 const InitialCondition& init, const Word& observed);

struct EnumerationOptions {
  double prune_tol = kDefaultPruneTol;
  std::size_t max_prefixes = kDefaultMaxPrefixes;
};

/// Depth-first walk over every word of length ≤ max_length whose probability
/// exceeds prune_tol, visiting prefixes before extensions and siblings in
/// symbol order. The visitor receives the word and its probability; the empty
/// word is visited first with probability 1 (or ‖ψ₀‖²).
/// Throws ResourceError if any depth holds more than max_prefixes live words.
void for_each_word(const QuantumGenerator& g, const InitialCondition& init,
                   std::size_t max_length, const EnumerationOptions& options,
                   const std::function<void(const Word&, double)>& visit);

/// Exact distribution of length-L words, pruning prefixes with probability
/// ≤ prune_tol (prefix probability never increases on extension).
WordDistribution enumerate_distribution(const QuantumGenerator& g, const InitialCondition& init,
                                        std::size_t length,
                                        const EnumerationOptions& options = {});

/// Monte Carlo trajectory with collapse. The initial basis state is drawn
/// uniformly unless `initial_state` is given. Each act applies U; Measure acts
/// then draw an outcome with probability ‖ψP(s)‖²/‖ψ‖², project and
/// renormalize.
///
/// Random numbers: std::mt19937_64 seeded with `seed`; each uniform double is
/// (next() >> 11)·2⁻⁵³. The initial state uses one draw (floor(u·dim)) and
/// each Measure act one draw (inverse CDF over symbols in alphabet order).
Trajectory sample_trajectory(const QuantumGenerator& g, const MeasurementProtocol& protocol,
                             std::size_t n_observed, std::uint64_t seed,
                             std::optional<std::size_t> initial_state = std::nullopt);

/// Sliding-window block frequencies (t.size() − L + 1 windows).
WordDistribution empirical_distribution(const Trajectory& t, std::size_t length,
                                        std::size_t alphabet_size);

}  // namespace qproc
