#include "qproc/generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "qproc/error.hpp"

namespace qproc {

QuantumGenerator QuantumGenerator::build(CMatrix unitary, std::vector<CMatrix> projectors,
                                         std::vector<std::string> alphabet, std::string name) {
  if (!unitary.is_square() || unitary.rows() == 0) {
    throw ShapeError("generator '" + name + "': unitary must be a non-empty square matrix");
  }
  const std::size_t n = unitary.rows();
  if (alphabet.empty() || alphabet.size() > kMaxAlphabet) {
    throw ShapeError("generator '" + name + "': alphabet size must be in 1.." +
                     std::to_string(kMaxAlphabet));
  }
  if (projectors.size() != alphabet.size()) {
    throw ShapeError("generator '" + name + "': " + std::to_string(alphabet.size()) +
                     " symbols but " + std::to_string(projectors.size()) + " projectors");
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (std::find(alphabet.begin() + static_cast<std::ptrdiff_t>(i) + 1, alphabet.end(),
                  alphabet[i]) != alphabet.end()) {
      throw ValidationError("generator '" + name + "': duplicate symbol '" + alphabet[i] + "'",
                            0.0);
    }
  }

  const double ures = unitarity_residual(unitary);
  if (ures > kStructuralTol) {
    throw ValidationError("generator '" + name + "': unitary is not unitary, residual " +
                              std::to_string(ures),
                          ures);
  }

  CMatrix sum = CMatrix::zeros(n, n);
  for (std::size_t s = 0; s < projectors.size(); ++s) {
    const CMatrix& p = projectors[s];
    if (p.rows() != n || p.cols() != n) {
      throw ShapeError("generator '" + name + "': projector '" + alphabet[s] + "' is " +
                       std::to_string(p.rows()) + "x" + std::to_string(p.cols()) +
                       ", expected " + std::to_string(n) + "x" + std::to_string(n));
    }
    const double pres = projector_residual(p);
    if (pres > kStructuralTol) {
      throw ValidationError("generator '" + name + "': P(" + alphabet[s] +
                                ") is not a projector, residual " + std::to_string(pres),
                            pres);
    }
    sum = sum + p;
  }
  for (std::size_t s = 0; s < projectors.size(); ++s) {
    for (std::size_t t = s + 1; t < projectors.size(); ++t) {
      const double ores = max_norm(matmul(projectors[s], projectors[t]));
      if (ores > kStructuralTol) {
        throw ValidationError("generator '" + name + "': P(" + alphabet[s] + ") and P(" +
                                  alphabet[t] + ") are not orthogonal, residual " +
                                  std::to_string(ores),
                              ores);
      }
    }
  }
  const double cres = max_norm(sum - CMatrix::identity(n));
  if (cres > kStructuralTol) {
    throw ValidationError("generator '" + name + "': projectors are not complete (sum != I), residual " +
                              std::to_string(cres),
                          cres);
  }

  QuantumGenerator g;
  g.transitions_.reserve(projectors.size());
  for (const CMatrix& p : projectors) g.transitions_.push_back(matmul(unitary, p));
  g.unitary_ = std::move(unitary);
  g.projectors_ = std::move(projectors);
  g.alphabet_ = std::move(alphabet);
  g.name_ = std::move(name);
  return g;
}

SymbolIndex QuantumGenerator::symbol_index(std::string_view label) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == label) return static_cast<SymbolIndex>(i);
  }
  throw std::out_of_range("generator '" + name_ + "': unknown symbol '" + std::string(label) +
                          "'");
}

const CMatrix& QuantumGenerator::transition_matrix(SymbolIndex s) const {
  if (s >= transitions_.size()) {
    throw std::out_of_range("generator '" + name_ + "': symbol index " + std::to_string(s) +
                            " out of range");
  }
  return transitions_[s];
}

MeasurementProtocol::MeasurementProtocol(std::vector<Act> pattern) : pattern_(std::move(pattern)) {
  if (pattern_.empty()) throw std::invalid_argument("protocol: empty pattern");
  if (measures_per_period() == 0) {
    throw std::invalid_argument("protocol: pattern must contain at least one Measure");
  }
}

MeasurementProtocol MeasurementProtocol::parse(std::string_view text) {
  std::vector<Act> acts;
  acts.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'M': acts.push_back(Act::Measure); break;
      case 'S': acts.push_back(Act::Skip); break;
      default:
        throw std::invalid_argument("protocol: unexpected character '" + std::string(1, c) +
                                    "' (expected M or S)");
    }
  }
  return MeasurementProtocol(std::move(acts));
}

std::size_t MeasurementProtocol::measures_per_period() const noexcept {
  return static_cast<std::size_t>(std::count(pattern_.begin(), pattern_.end(), Act::Measure));
}

std::string MeasurementProtocol::to_string() const {
  std::string out;
  for (Act a : pattern_) out.push_back(a == Act::Measure ? 'M' : 'S');
  return out;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("basis state index out of range");
  StateVector v{std::vector<Complex>(dim)};
  v.amplitudes[index] = 1.0;
  return v;
}

double StateVector::norm_squared() const {
  double n = 0.0;
  for (const Complex& z : amplitudes) n += std::norm(z);
  return n;
}

DensityMatrix::DensityMatrix(CMatrix rho) : rho_(std::move(rho)) {
  if (!rho_.is_square() || rho_.rows() == 0) {
    throw ShapeError("density matrix must be a non-empty square matrix");
  }
  const double herm = max_norm(rho_ - adjoint(rho_));
  if (herm > kStructuralTol) {
    throw ValidationError("density matrix is not Hermitian, residual " + std::to_string(herm),
                          herm);
  }
  const double tr = std::abs(trace(rho_) - 1.0);
  if (tr > kStructuralTol) {
    throw ValidationError("density matrix trace differs from 1 by " + std::to_string(tr), tr);
  }
  const std::vector<double> eig = hermitian_eigenvalues(rho_);
  if (eig.back() < -kStructuralTol) {
    throw ValidationError("density matrix has negative eigenvalue " + std::to_string(eig.back()),
                          -eig.back());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(Complex(1.0 / static_cast<double>(dim)) * CMatrix::identity(dim));
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  // Row-vector convention: Pr = ψ M M† ψ† = Tr[M† ρ M] with ρ_ij = conj(ψ_i) ψ_j.
  const std::size_t n = psi.amplitudes.size();
  CMatrix rho(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho(i, j) = std::conj(psi.amplitudes[i]) * psi.amplitudes[j];
  return DensityMatrix(std::move(rho));
}

QuantumGenerator effective_generator(const QuantumGenerator& g,
                                     const MeasurementProtocol& protocol) {
  const auto& pattern = protocol.pattern();
  if (protocol.measures_per_period() != 1 || pattern.back() != Act::Measure) {
    throw UnsupportedError("effective_generator: pattern '" + protocol.to_string() +
                           "' is not of the form S...SM");
  }
  if (pattern.size() == 1) return g;
  return QuantumGenerator::build(mat_power(g.unitary(), static_cast<unsigned>(pattern.size())),
                                 g.projectors(), g.alphabet(),
                                 g.name() + "@" + protocol.to_string());
}

bool is_deterministic(const QuantumGenerator& g, double zero_tol) {
  for (std::size_t s = 0; s < g.alphabet_size(); ++s) {
    const CMatrix& t = g.transition_matrix(static_cast<SymbolIndex>(s));
    for (std::size_t i = 0; i < t.rows(); ++i) {
      int nonzero = 0;
      for (std::size_t j = 0; j < t.cols(); ++j) {
        if (std::abs(t(i, j)) > zero_tol) ++nonzero;
      }
      if (nonzero > 1) return false;
    }
  }
  return true;
}

DensityMatrix stationary_density(const QuantumGenerator& g) {
  if (!is_deterministic(g)) {
    throw UnsupportedError("stationary_density: generator '" + g.name() +
                           "' is not deterministic; supply an explicit initial condition");
  }
  DensityMatrix rho = DensityMatrix::maximally_mixed(g.dim());
  CMatrix image = CMatrix::zeros(g.dim(), g.dim());
  for (std::size_t s = 0; s < g.alphabet_size(); ++s) {
    const CMatrix& t = g.transition_matrix(static_cast<SymbolIndex>(s));
    image = image + matmul(adjoint(t), matmul(rho.matrix(), t));
  }
  const double res = max_norm(image - rho.matrix());
  if (res > kStructuralTol) {
    throw NumericalError("stationary_density: uniform state is not stationary for '" + g.name() +
                         "', residual " + std::to_string(res));
  }
  return rho;
}

std::size_t ergodic_components(const QuantumGenerator& g, double tol) {
  const std::size_t n = g.dim();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (std::norm(g.unitary()(i, j)) > tol) reach[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;

  // A class is closed when everything reachable from it reaches back.
  std::vector<bool> counted(n, false);
  std::size_t closed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (counted[i]) continue;
    bool is_closed = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) counted[j] = true;
      if (reach[i][j] && !reach[j][i]) is_closed = false;
    }
    if (is_closed) ++closed;
  }
  return closed;
}

}  // namespace qproc
