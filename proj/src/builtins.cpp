#include "qproc/builtins.hpp"

#include <cmath>
#include <stdexcept>

namespace qproc::builtins {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Complex kI{0.0, 1.0};

}  // namespace

CMatrix hadamard() {
  return {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
}

CMatrix spin1_rotation() {
  return {{kInvSqrt2, kInvSqrt2, 0.0}, {0.0, 0.0, -1.0}, {-kInvSqrt2, kInvSqrt2, 0.0}};
}

CMatrix spin1_jx() { return {{0.0, 0.0, 0.0}, {0.0, 0.0, kI}, {0.0, -kI, 0.0}}; }
CMatrix spin1_jy() { return {{0.0, 0.0, kI}, {0.0, 0.0, 0.0}, {-kI, 0.0, 0.0}}; }
CMatrix spin1_jz() { return {{0.0, kI, 0.0}, {-kI, 0.0, 0.0}, {0.0, 0.0, 0.0}}; }

GeneratorSpec beamsplitter(std::string_view pattern) {
  const CMatrix p0 = CMatrix{{1.0, 0.0}, {0.0, 0.0}};
  const CMatrix p1 = CMatrix{{0.0, 0.0}, {0.0, 1.0}};
  const std::string name = pattern == "M" ? "beamsplitter-i"
                           : pattern == "SM" ? "beamsplitter-ii"
                                             : "beamsplitter-" + std::string(pattern);
  return {QuantumGenerator::build(hadamard(), {p0, p1}, {"0", "1"}, name),
          MeasurementProtocol::parse(pattern)};
}

GeneratorSpec spin1(char axis) {
  CMatrix j;
  switch (axis) {
    case 'x': j = spin1_jx(); break;
    case 'y': j = spin1_jy(); break;
    case 'z': j = spin1_jz(); break;
    default: throw std::invalid_argument("spin1: axis must be x, y or z");
  }
  const CMatrix j2 = matmul(j, j);
  const CMatrix zero_component = CMatrix::identity(3) - j2;
  return {QuantumGenerator::build(spin1_rotation(), {zero_component, j2}, {"0", "1"},
                                  std::string("spin1-") + axis),
          MeasurementProtocol::parse("M")};
}

const std::vector<BuiltinInfo>& catalog() {
  static const std::vector<BuiltinInfo> kCatalog = {
      {"beamsplitter-i", "iterated beam splitter, detectors active every pass (pattern M)"},
      {"beamsplitter-ii", "iterated beam splitter, detectors active every other pass (pattern SM)"},
      {"spin1-y", "spin-1 particle, measuring J_y^2 (Golden Mean process)"},
      {"spin1-x", "spin-1 particle, measuring J_x^2 (Even process)"},
  };
  return kCatalog;
}

GeneratorSpec make(std::string_view name) {
  if (name == "beamsplitter-i") return beamsplitter("M");
  if (name == "beamsplitter-ii") return beamsplitter("SM");
  if (name == "spin1-y") return spin1('y');
  if (name == "spin1-x") return spin1('x');
  throw std::out_of_range("unknown built-in example '" + std::string(name) + "'");
}

}  // namespace qproc::builtins
