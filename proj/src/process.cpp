#include "qproc/process.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qproc/error.hpp"

namespace qproc {

namespace {

void check_word(const QuantumGenerator& g, const Word& w) {
  for (SymbolIndex s : w) {
    if (s >= g.alphabet_size()) {
      throw std::out_of_range("unknown symbol index " + std::to_string(s) + " for generator '" +
                              g.name() + "'");
    }
  }
}

std::size_t init_dim(const InitialCondition& init) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DensityMatrix>) {
          return x.dim();
        } else {
          return x.amplitudes.size();
        }
      },
      init);
}

void check_init(const QuantumGenerator& g, const InitialCondition& init) {
  if (init_dim(init) != g.dim()) {
    throw ShapeError("initial condition has dimension " + std::to_string(init_dim(init)) +
                     ", generator '" + g.name() + "' has " + std::to_string(g.dim()));
  }
}

// Probability carried by operator M from the given start: Tr[M†ρM] or ‖ψM‖².
double operator_probability(const CMatrix& m, const InitialCondition& init) {
  if (const auto* rho = std::get_if<DensityMatrix>(&init)) {
    // Tr[M† ρ M] = Σ_k Σ_ij conj(M_ik) ρ_ij M_jk
    const CMatrix& r = rho->matrix();
    const std::size_t n = m.rows();
    double p = 0.0;
    for (std::size_t k = 0; k < m.cols(); ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        const Complex mik = m(i, k);
        if (mik == Complex{}) continue;
        Complex acc{};
        for (std::size_t j = 0; j < n; ++j) acc += r(i, j) * m(j, k);
        p += (std::conj(mik) * acc).real();
      }
    }
    return p;
  }
  const auto& psi = std::get<StateVector>(init).amplitudes;
  double p = 0.0;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    Complex acc{};
    for (std::size_t i = 0; i < psi.size(); ++i) acc += psi[i] * m(i, k);
    p += std::norm(acc);
  }
  return p;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void apply_right(std::vector<Complex>& psi, const CMatrix& m) {
  std::vector<Complex> out(m.cols());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (psi[i] == Complex{}) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += psi[i] * m(i, j);
  }
  psi = std::move(out);
}

}  // namespace

double WordDistribution::probability(const Word& w) const {
  auto it = probabilities.find(w);
  return it == probabilities.end() ? 0.0 : it->second;
}

double WordDistribution::total() const {
  double t = 0.0;
  for (const auto& [w, p] : probabilities) t += p;
  return t;
}

CMatrix word_operator(const QuantumGenerator& g, const Word& word) {
  check_word(g, word);
  CMatrix m = CMatrix::identity(g.dim());
  for (SymbolIndex s : word) m = matmul(m, g.transition_matrix(s));
  return m;
}

double word_probability(const QuantumGenerator& g, const InitialCondition& init,
                        const Word& word) {
  check_init(g, init);
  return operator_probability(word_operator(g, word), init);
}

double word_probability_protocol(const QuantumGenerator& g, const MeasurementProtocol& protocol,
                                 const InitialCondition& init, const Word& observed) {
  check_init(g, init);
  check_word(g, observed);
  CMatrix m = CMatrix::identity(g.dim());
  std::size_t consumed = 0;
  const auto& pattern = protocol.pattern();
  // Trailing Skip acts after the last Measure only apply U, which preserves
  // probability, so the walk stops at the last Measure.
  for (std::size_t step = 0; consumed < observed.size(); ++step) {
    m = matmul(m, g.unitary());
    if (pattern[step % pattern.size()] == Act::Measure) {
      m = matmul(m, g.projector(observed[consumed]));
      ++consumed;
    }
  }
  return operator_probability(m, init);
}

void for_each_word(const QuantumGenerator& g, const InitialCondition& init,
                   std::size_t max_length, const EnumerationOptions& options,
                   const std::function<void(const Word&, double)>& visit) {
  check_init(g, init);
  const std::size_t k = g.alphabet_size();
  std::vector<std::size_t> live(max_length + 1, 0);

  struct Frame {
    CMatrix op;
    SymbolIndex next;
  };
  Word word;
  word.reserve(max_length);
  std::vector<Frame> stack;
  stack.reserve(max_length + 1);

  const CMatrix start = CMatrix::identity(g.dim());
  visit(word, operator_probability(start, init));
  live[0] = 1;
  if (max_length == 0) return;
  stack.push_back({start, 0});

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == k) {
      stack.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    const SymbolIndex s = top.next++;
    CMatrix op = matmul(top.op, g.transition_matrix(s));
    const double p = operator_probability(op, init);
    if (p <= options.prune_tol) continue;
    word.push_back(s);
    const std::size_t depth = word.size();
    if (++live[depth] > options.max_prefixes) {
      throw ResourceError("enumeration of '" + g.name() + "' exceeded " +
                          std::to_string(options.max_prefixes) + " live prefixes at length " +
                          std::to_string(depth));
    }
    visit(word, p);
    if (depth < max_length) {
      stack.push_back({std::move(op), 0});
    } else {
      word.pop_back();
    }
  }
}

WordDistribution enumerate_distribution(const QuantumGenerator& g, const InitialCondition& init,
                                        std::size_t length, const EnumerationOptions& options) {
  WordDistribution d;
  d.length = length;
  d.alphabet_size = g.alphabet_size();
  d.kind = DistributionKind::Exact;
  for_each_word(g, init, length, options, [&](const Word& w, double p) {
    if (w.size() == length) d.probabilities.emplace(w, p);
  });
  return d;
}

Trajectory sample_trajectory(const QuantumGenerator& g, const MeasurementProtocol& protocol,
                             std::size_t n_observed, std::uint64_t seed,
                             std::optional<std::size_t> initial_state) {
  if (n_observed == 0) throw std::invalid_argument("sample_trajectory: n_observed must be >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t n = g.dim();

  Trajectory t;
  t.seed = seed;
  if (initial_state) {
    if (*initial_state >= n) throw std::out_of_range("sample_trajectory: initial state index");
    t.initial_state_index = *initial_state;
  } else {
    t.initial_state_index =
        std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)));
  }
  std::vector<Complex> psi = StateVector::basis(n, t.initial_state_index).amplitudes;
  t.symbols.reserve(n_observed);

  const auto& pattern = protocol.pattern();
  std::vector<double> probs(g.alphabet_size());
  for (std::size_t step = 0; t.symbols.size() < n_observed; ++step) {
    apply_right(psi, g.unitary());
    if (pattern[step % pattern.size()] == Act::Skip) continue;

    double norm = 0.0;
    for (const Complex& z : psi) norm += std::norm(z);
    double total = 0.0;
    for (std::size_t s = 0; s < probs.size(); ++s) {
      const CMatrix& p = g.projector(static_cast<SymbolIndex>(s));
      double ps = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        Complex acc{};
        for (std::size_t i = 0; i < n; ++i) acc += psi[i] * p(i, j);
        ps += std::norm(acc);
      }
      probs[s] = ps / norm;
      total += probs[s];
    }
    bool degenerate = true;
    for (double q : probs) degenerate = degenerate && q < 1e-12;
    if (degenerate) {
      throw NumericalError("sample_trajectory: all outcome probabilities vanish at step " +
                           std::to_string(step));
    }

    const double u = uniform01(rng) * total;
    std::size_t chosen = probs.size() - 1;
    double cumulative = 0.0;
    for (std::size_t s = 0; s < probs.size(); ++s) {
      cumulative += probs[s];
      if (u < cumulative && probs[s] > 0.0) {
        chosen = s;
        break;
      }
    }
    while (probs[chosen] <= 0.0) --chosen;  // u landed in floating-point slack

    apply_right(psi, g.projector(static_cast<SymbolIndex>(chosen)));
    const double scale = 1.0 / std::sqrt(probs[chosen] * norm);
    for (Complex& z : psi) z *= scale;
    t.symbols.push_back(static_cast<SymbolIndex>(chosen));
  }
  return t;
}

WordDistribution empirical_distribution(const Trajectory& t, std::size_t length,
                                        std::size_t alphabet_size) {
  if (t.symbols.size() < length || t.symbols.empty()) {
    throw std::invalid_argument("empirical_distribution: trajectory of length " +
                                std::to_string(t.symbols.size()) + " is shorter than L = " +
                                std::to_string(length));
  }
  WordDistribution d;
  d.length = length;
  d.alphabet_size = alphabet_size;
  d.kind = DistributionKind::Empirical;
  d.sample_count = t.symbols.size() - length + 1;

  std::map<Word, std::size_t> counts;
  for (std::size_t i = 0; i < d.sample_count; ++i) {
    Word w(t.symbols.begin() + static_cast<std::ptrdiff_t>(i),
           t.symbols.begin() + static_cast<std::ptrdiff_t>(i + length));
    ++counts[w];
  }
  for (const auto& [w, c] : counts) {
    d.probabilities.emplace(w, static_cast<double>(c) / static_cast<double>(d.sample_count));
  }
  return d;
}

}  // namespace qproc
