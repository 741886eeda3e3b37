#include "qproc/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "qproc/error.hpp"
#include "qproc/process.hpp"

namespace qproc {

void ClassicalGenerator::validate() const {
  if (matrices.size() != alphabet.size()) {
    throw ShapeError("classical generator: one matrix per symbol required");
  }
  RealMatrix sum(dim);
  for (const RealMatrix& t : matrices) {
    if (t.dim != dim) throw ShapeError("classical generator: matrix dimension mismatch");
    for (std::size_t i = 0; i < dim * dim; ++i) {
      if (t.entries[i] < 0.0) throw ValidationError("classical generator: negative entry", -t.entries[i]);
      sum.entries[i] += t.entries[i];
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim; ++j) row += sum(i, j);
    if (std::abs(row - 1.0) > kStructuralTol) {
      throw ValidationError("classical generator: row " + std::to_string(i) + " of sum T(s) sums to " +
                                std::to_string(row),
                            std::abs(row - 1.0));
    }
  }
  if (stationary.size() != dim) throw ShapeError("classical generator: stationary vector size");
  double total = 0.0;
  for (double p : stationary) {
    if (p < 0.0) throw ValidationError("classical generator: negative stationary entry", -p);
    total += p;
  }
  if (std::abs(total - 1.0) > kStructuralTol) {
    throw ValidationError("classical generator: stationary vector sums to " + std::to_string(total),
                          std::abs(total - 1.0));
  }
  for (std::size_t j = 0; j < dim; ++j) {
    double pj = 0.0;
    for (std::size_t i = 0; i < dim; ++i) pj += stationary[i] * sum(i, j);
    if (std::abs(pj - stationary[j]) > kStructuralTol) {
      throw ValidationError("classical generator: stationary vector is not invariant",
                            std::abs(pj - stationary[j]));
    }
  }
}

ClassicalGenerator classical_equivalent(const QuantumGenerator& g) {
  if (!is_deterministic(g)) {
    throw UnsupportedError("classical_equivalent: generator '" + g.name() +
                           "' is not deterministic");
  }
  const std::size_t n = g.dim();
  ClassicalGenerator cg;
  cg.dim = n;
  cg.alphabet = g.alphabet();
  cg.stationary.assign(n, 1.0 / static_cast<double>(n));
  for (std::size_t s = 0; s < g.alphabet_size(); ++s) {
    const CMatrix& p = g.projector(static_cast<SymbolIndex>(s));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && std::abs(p(i, j)) > kStructuralTol) {
          throw UnsupportedError("classical_equivalent: projector P(" + g.alphabet()[s] +
                                 ") is not diagonal in the computational basis");
        }
      }
    }
    RealMatrix t(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(p(j, j) - 1.0) > kStructuralTol) continue;
      for (std::size_t i = 0; i < n; ++i) t(i, j) = std::norm(g.unitary()(i, j));
    }
    cg.matrices.push_back(std::move(t));
  }
  return cg;
}

namespace {

std::vector<double> step(const std::vector<double>& v, const RealMatrix& t) {
  std::vector<double> out(t.dim, 0.0);
  for (std::size_t i = 0; i < t.dim; ++i) {
    if (v[i] == 0.0) continue;
    for (std::size_t j = 0; j < t.dim; ++j) out[j] += v[i] * t(i, j);
  }
  return out;
}

double mass(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m += x;
  return m;
}

}  // namespace

double classical_word_probability(const ClassicalGenerator& cg, const Word& word) {
  std::vector<double> v = cg.stationary;
  for (SymbolIndex s : word) {
    if (s >= cg.matrices.size()) {
      throw std::out_of_range("classical_word_probability: unknown symbol index " +
                              std::to_string(s));
    }
    v = step(v, cg.matrices[s]);
  }
  return mass(v);
}

double verify_equivalence(const QuantumGenerator& g, const ClassicalGenerator& cg,
                          std::size_t L) {
  if (g.dim() != cg.dim || g.alphabet_size() != cg.matrices.size()) {
    throw ShapeError("verify_equivalence: generators differ in dimension or alphabet");
  }
  const InitialCondition rho = DensityMatrix::maximally_mixed(g.dim());
  const std::size_t k = g.alphabet_size();
  double gap = 0.0;

  // Exhaustive DFS over all k^L words, carrying both running products.
  struct Frame {
    CMatrix op;
    std::vector<double> v;
    SymbolIndex next;
  };
  Word word;
  std::vector<Frame> stack;
  stack.push_back({CMatrix::identity(g.dim()), cg.stationary, 0});
  gap = std::abs(word_probability(g, rho, word) - mass(cg.stationary));
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == k || word.size() == L) {
      stack.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    const SymbolIndex s = top.next++;
    Frame child{matmul(top.op, g.transition_matrix(s)), step(top.v, cg.matrices[s]), 0};
    const CMatrix& m = child.op;
    double pq = 0.0;
    for (const Complex& z : m.entries()) pq += std::norm(z);
    pq /= static_cast<double>(g.dim());  // Tr[M† (I/n) M]
    gap = std::max(gap, std::abs(pq - mass(child.v)));
    word.push_back(s);
    stack.push_back(std::move(child));
  }
  return gap;
}

}  // namespace qproc
