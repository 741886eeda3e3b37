#include "qproc/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qproc/error.hpp"

namespace qproc {

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

double block_entropy(const WordDistribution& d) {
  const double total = d.total();
  if (std::abs(total - 1.0) > 1e-6) {
    throw ValidationError("block_entropy: distribution sums to " + std::to_string(total),
                          std::abs(total - 1.0));
  }
  double h = 0.0;
  for (const auto& [w, p] : d.probabilities) h += plogp(p);
  return h;
}

EntropyCurve block_entropy_curve(const QuantumGenerator& g, const InitialCondition& init,
                                 std::size_t l_max, const EnumerationOptions& options) {
  std::vector<double> h(l_max + 1, 0.0);
  std::vector<double> mass(l_max + 1, 0.0);
  for_each_word(g, init, l_max, options, [&](const Word& w, double p) {
    h[w.size()] += plogp(p);
    mass[w.size()] += p;
  });
  for (std::size_t L = 0; L <= l_max; ++L) {
    if (std::abs(mass[L] - 1.0) > 1e-6) {
      throw ValidationError("block_entropy_curve: length-" + std::to_string(L) +
                                " distribution sums to " + std::to_string(mass[L]),
                            std::abs(mass[L] - 1.0));
    }
  }
  h[0] = 0.0;
  return EntropyCurve{std::move(h)};
}

std::vector<double> entropy_rate_curve(const EntropyCurve& c) {
  std::vector<double> dh;
  for (std::size_t L = 1; L < c.H.size(); ++L) dh.push_back(c.H[L] - c.H[L - 1]);
  return dh;
}

double entropy_rate_closed_form(const QuantumGenerator& g) {
  if (!is_deterministic(g)) {
    throw UnsupportedError("entropy_rate_closed_form: generator '" + g.name() +
                           "' is not deterministic");
  }
  const CMatrix& u = g.unitary();
  double h = 0.0;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) h += plogp(std::norm(u(i, j)));
  return h / static_cast<double>(g.dim());
}

ExcessEntropy excess_entropy(const EntropyCurve& c, double h_mu) {
  const std::size_t L = c.l_max();
  auto e_at = [&](std::size_t l) { return c.H[l] - h_mu * static_cast<double>(l); };
  const double e = e_at(L);
  const double residual = L == 0 ? 0.0 : std::abs(e - e_at(L - 1));
  return {e, residual};
}

TransientInformation transient_information(const EntropyCurve& c, double h_mu, double E) {
  double sum = 0.0;
  double last = 0.0;
  for (std::size_t L = 0; L < c.H.size(); ++L) {
    last = E + h_mu * static_cast<double>(L) - c.H[L];
    sum += last;
  }
  return {sum, 2.0 * std::abs(last)};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix())) s += plogp(lambda);
  return s;
}

double density_matrix_rate(const DensityMatrix& rho, std::size_t L) {
  if (L == 0) throw std::invalid_argument("density_matrix_rate: L must be >= 1");
  return von_neumann_entropy(rho);
}

std::vector<Word> forbidden_words(const std::map<std::size_t, WordDistribution>& dists) {
  std::vector<Word> out;
  if (dists.empty()) return out;
  const std::size_t k = dists.begin()->second.alphabet_size;
  const std::size_t cap = dists.rbegin()->first;

  auto present = [&](const Word& w) {
    if (w.empty()) return true;
    auto it = dists.find(w.size());
    if (it == dists.end()) {
      throw std::invalid_argument("forbidden_words: missing distribution for length " +
                                  std::to_string(w.size()));
    }
    return it->second.probabilities.count(w) > 0;
  };

  for (std::size_t L = 1; L <= cap; ++L) {
    // Candidates extend an allowed (L−1)-word by one symbol.
    std::vector<Word> shorter;
    if (L == 1) {
      shorter.push_back({});
    } else {
      auto it = dists.find(L - 1);
      if (it == dists.end()) {
        throw std::invalid_argument("forbidden_words: missing distribution for length " +
                                    std::to_string(L - 1));
      }
      for (const auto& [w, p] : it->second.probabilities) shorter.push_back(w);
    }
    for (const Word& prefix : shorter) {
      for (std::size_t s = 0; s < k; ++s) {
        Word w = prefix;
        w.push_back(static_cast<SymbolIndex>(s));
        if (present(w)) continue;
        const Word suffix(w.begin() + 1, w.end());
        if (present(suffix)) out.push_back(std::move(w));
      }
    }
  }
  return out;
}

InfoReport analyze(const QuantumGenerator& g, const MeasurementProtocol& protocol,
                   std::size_t l_max, const AnalyzeOptions& options) {
  if (l_max < 1) throw std::invalid_argument("analyze: l_max must be >= 1");
  const QuantumGenerator eff = effective_generator(g, protocol);

  InfoReport r;
  r.name = g.name();
  r.alphabet = g.alphabet();
  r.dim = g.dim();
  r.protocol = protocol.to_string();
  r.deterministic = is_deterministic(eff);
  r.ergodic_components = ergodic_components(eff);

  const DensityMatrix rho =
      r.deterministic ? stationary_density(eff) : DensityMatrix::maximally_mixed(eff.dim());
  r.S_q = von_neumann_entropy(rho);

  r.entropy_curve = block_entropy_curve(eff, rho, l_max, options.enumeration);
  const std::vector<double> dh = entropy_rate_curve(r.entropy_curve);
  r.h_mu_estimate = dh.back();
  if (r.deterministic) {
    r.h_mu_closed_form = entropy_rate_closed_form(eff);
    r.h_mu = *r.h_mu_closed_form;
    r.h_mu_gap = std::abs(r.h_mu_estimate - r.h_mu);
  } else {
    r.h_mu = r.h_mu_estimate;
  }

  const ExcessEntropy e = excess_entropy(r.entropy_curve, r.h_mu);
  r.E = e.value;
  r.E_residual = e.residual;
  const TransientInformation t = transient_information(r.entropy_curve, r.h_mu, r.E);
  r.T = t.value;
  r.T_tail = t.tail;
  r.T_last_term = t.tail / 2.0;

  r.forbidden_cap = std::min(options.forbidden_cap, l_max);
  std::map<std::size_t, WordDistribution> dists;
  for (std::size_t L = 0; L <= r.forbidden_cap; ++L) {
    dists.emplace(L, enumerate_distribution(eff, rho, L, options.enumeration));
  }
  r.forbidden_words = forbidden_words(dists);
  return r;
}

}  // namespace qproc
