#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qproc/classical.hpp"
#include "qproc/infotheory.hpp"

namespace qproc::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,  // usage, parse or validation failure
  kResourceCap = 2,
  kNumerical = 3,
};

/// Runs the `qproc` command line. `args` excludes the program name.
/// Diagnostics go to `err` as a single line "qproc: error[<kind>]: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Renders a word using the generator's labels: concatenated when every
/// label is one character, otherwise dot-separated.
std::string word_to_string(const std::vector<std::string>& alphabet, const Word& w);

std::string format_report(const InfoReport& r);

/// Header `L,H,dH,E_L,T_partial`, 12 significant digits. dH at L = 0 is
/// log2 of the alphabet size.
std::string format_curve_csv(const InfoReport& r);

std::string format_classical(const ClassicalGenerator& cg);

}  // namespace qproc::cli
