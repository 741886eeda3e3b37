#pragma once

// Line-oriented generator description:
//
//   [generator]
//   name = <text>
//   dimension = <int>
//   alphabet = <symbol> <symbol> ...
//   [unitary]
//   row = <c> <c> ...            # `dimension` rows; c like -0.70710678+0.0i
//   [projector <symbol>]         # one per symbol, either
//   basis = <i> <j> ...          #   computational basis states, or
//   row = <c> ...                #   explicit rows
//   [protocol]
//   pattern = M | SM | SSM | ...
//
// `#` starts a comment anywhere on a line.

#include <string>
#include <string_view>

#include "qproc/error.hpp"
#include "qproc/generator.hpp"

namespace qproc {

struct GeneratorSpec {
  QuantumGenerator generator;
  MeasurementProtocol protocol;
};

/// Parse failure; `line` is 1-based (0 when the error concerns the whole file).
class SpecError : public Error {
 public:
  SpecError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

GeneratorSpec parse_spec(std::string_view text);
std::string serialize_spec(const GeneratorSpec& spec);

/// Accepts "a", "bi", "a+bi", "a-bi" with any from_chars-compatible reals.
Complex parse_complex(std::string_view literal);
/// Shortest round-trip form, always "<re><+|-><im>i".
std::string format_complex(Complex z);

}  // namespace qproc
