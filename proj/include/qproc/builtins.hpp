#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qproc/linalg.hpp"
#include "qproc/specfile.hpp"

namespace qproc::builtins {

/// (1/√2)[[1, 1], [1, −1]].
CMatrix hadamard();

/// Rotation about y by π/4 followed by rotation about x by π/2.
CMatrix spin1_rotation();

/// Spin-1 operators in the Cartesian representation (J_k)_ij = −i ε_kij.
CMatrix spin1_jx();
CMatrix spin1_jy();
CMatrix spin1_jz();

/// Iterated beam splitter measured every pass (M) or every second pass (SM).
GeneratorSpec beamsplitter(std::string_view pattern);

/// Spin-1 particle measuring the squared spin component along `axis`
/// ('x', 'y' or 'z'). Outcome 0 is "J_axis² = 0", i.e. P(0) = 1 − J_axis².
GeneratorSpec spin1(char axis);

struct BuiltinInfo {
  std::string name;
  std::string description;
};

/// beamsplitter-i, beamsplitter-ii, spin1-y, spin1-x.
const std::vector<BuiltinInfo>& catalog();

/// Throws std::out_of_range for unknown names.
GeneratorSpec make(std::string_view name);

}  // namespace qproc::builtins
