#include "qproc/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qproc/builtins.hpp"
#include "qproc/error.hpp"
#include "qproc/process.hpp"
#include "qproc/specfile.hpp"

namespace qproc::cli {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct UsageError : Error {
  using Error::Error;
};

struct Source {
  std::string example;
  std::string spec_path;
};

struct RunConfig {
  std::optional<std::size_t> l_max;
  double prune_tol = kDefaultPruneTol;
  std::uint64_t seed = 1;
  std::size_t steps = 100'000;
  std::string out_dir;
};

GeneratorSpec load(const Source& src) {
  if (src.example.empty() == src.spec_path.empty()) {
    throw UsageError("exactly one of --example or --spec is required");
  }
  if (!src.example.empty()) {
    try {
      return builtins::make(src.example);
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
  std::ifstream in(src.spec_path, std::ios::binary);
  if (!in) throw UsageError("cannot open spec file '" + src.spec_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::size_t default_l_max(const QuantumGenerator& g) { return g.dim() <= 2 ? 12 : 24; }

std::size_t max_prefixes_from_env() {
  const char* v = std::getenv("QPROC_MAX_PREFIXES");
  if (v == nullptr || *v == '\0') return kDefaultMaxPrefixes;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw UsageError("QPROC_MAX_PREFIXES must be a positive integer");
  return static_cast<std::size_t>(n);
}

std::string file_stem(const std::string& name) {
  std::string s;
  for (char c : name) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
    s.push_back(ok ? c : '_');
  }
  return s.empty() ? "generator" : s;
}

void write_file(const std::string& dir, const std::string& filename, const std::string& body) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / filename;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path.string() + "'");
  f << body;
}

int cmd_analyze(const Source& src, const RunConfig& cfg, std::ostream& out) {
  const GeneratorSpec spec = load(src);
  const std::size_t l_max = cfg.l_max.value_or(default_l_max(spec.generator));
  AnalyzeOptions opts;
  opts.enumeration.prune_tol = cfg.prune_tol;
  opts.enumeration.max_prefixes = max_prefixes_from_env();
  const InfoReport r = analyze(spec.generator, spec.protocol, l_max, opts);
  const std::string report = format_report(r);
  out << report;
  if (!cfg.out_dir.empty()) {
    const std::string stem = file_stem(r.name);
    write_file(cfg.out_dir, stem + ".report.txt", report);
    write_file(cfg.out_dir, stem + ".curve.csv", format_curve_csv(r));
  }
  return kOk;
}

int cmd_sample(const Source& src, const RunConfig& cfg, std::ostream& out) {
  if (cfg.steps == 0) throw UsageError("--steps must be >= 1");
  const std::size_t block = cfg.l_max.value_or(4);
  if (block == 0) throw UsageError("--lmax must be >= 1");
  if (cfg.steps < block) throw UsageError("--steps must be >= --lmax");
  const GeneratorSpec spec = load(src);
  const QuantumGenerator& g = spec.generator;
  const Trajectory t = sample_trajectory(g, spec.protocol, cfg.steps, cfg.seed);
  const WordDistribution d = empirical_distribution(t, block, g.alphabet_size());

  std::ostringstream table;
  table << "word,count,frequency\n";
  for (const auto& [w, p] : d.probabilities) {
    const auto count = static_cast<std::size_t>(std::llround(p * static_cast<double>(d.sample_count)));
    table << word_to_string(g.alphabet(), w) << ',' << count << ',' << num(p) << '\n';
  }

  out << "generator: " << g.name() << "\n";
  out << "protocol: " << spec.protocol.to_string() << "\n";
  out << "seed: " << cfg.seed << "\n";
  out << "initial state: " << t.initial_state_index << "\n";
  out << "observed symbols: " << t.symbols.size() << "\n";
  out << "block length: " << block << " (" << d.sample_count << " windows, "
      << d.probabilities.size() << " distinct)\n";

  if (!cfg.out_dir.empty()) {
    std::string line;
    line.reserve(t.symbols.size() * 2);
    for (std::size_t i = 0; i < t.symbols.size(); ++i) {
      if (i) line.push_back(' ');
      line += g.alphabet()[t.symbols[i]];
    }
    line.push_back('\n');
    const std::string stem = file_stem(g.name());
    write_file(cfg.out_dir, stem + ".trajectory.txt", line);
    write_file(cfg.out_dir, stem + ".blocks.csv", table.str());
  } else {
    out << table.str();
  }
  return kOk;
}

int cmd_compare(const Source& src, const RunConfig& cfg, std::ostream& out) {
  const GeneratorSpec spec = load(src);
  const QuantumGenerator eff = effective_generator(spec.generator, spec.protocol);
  if (!is_deterministic(eff)) {
    throw ValidationError("generator '" + eff.name() +
                              "' is not deterministic (some T(s) has two nonzero entries in a "
                              "row); no classical equivalent exists",
                          0.0);
  }
  const ClassicalGenerator cg = classical_equivalent(eff);
  const std::size_t l_max = cfg.l_max.value_or(default_l_max(eff));
  const double gap = verify_equivalence(eff, cg, l_max);
  std::ostringstream body;
  body << "generator: " << spec.generator.name() << "\n";
  body << "protocol: " << spec.protocol.to_string() << "\n";
  body << format_classical(cg);
  body << "max |Pr_quantum - Pr_classical| over words of length <= " << l_max << ": " << num(gap)
       << "\n";
  out << body.str();
  if (!cfg.out_dir.empty()) {
    write_file(cfg.out_dir, file_stem(spec.generator.name()) + ".compare.txt", body.str());
  }
  return kOk;
}

int cmd_examples(const std::string& show, std::ostream& out) {
  if (!show.empty()) {
    try {
      out << serialize_spec(builtins::make(show));
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
    return kOk;
  }
  for (const auto& b : builtins::catalog()) out << b.name << "\t" << b.description << "\n";
  return kOk;
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

std::string word_to_string(const std::vector<std::string>& alphabet, const Word& w) {
  bool single = true;
  for (const auto& a : alphabet) single = single && a.size() == 1;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i) s.push_back('.');
    s += alphabet.at(w[i]);
  }
  return s;
}

std::string format_report(const InfoReport& r) {
  std::ostringstream o;
  o << "generator: " << r.name << "\n";
  o << "dimension: " << r.dim << "\n";
  o << "alphabet:";
  for (const auto& a : r.alphabet) o << ' ' << a;
  o << "\n";
  o << "protocol: " << r.protocol << "\n";
  o << "deterministic: " << (r.deterministic ? "yes" : "no") << "\n";
  o << "ergodic components: " << r.ergodic_components << "\n";
  o << "L_max: " << r.entropy_curve.l_max() << "\n";
  if (r.h_mu_closed_form) {
    o << "h_mu closed form: " << num(*r.h_mu_closed_form) << " bits/measurement\n";
  } else {
    o << "h_mu closed form: n/a (nondeterministic)\n";
  }
  o << "h_mu estimate dH(L_max): " << num(r.h_mu_estimate) << " bits/measurement\n";
  if (r.h_mu_gap) o << "h_mu gap |dH(L_max) - closed form|: " << num(*r.h_mu_gap) << "\n";
  o << "S_q: " << num(r.S_q) << " bits\n";
  o << "E: " << num(r.E) << " bits (residual |E(L_max) - E(L_max-1)| = " << num(r.E_residual)
    << ")\n";
  o << "T: " << num(r.T) << " bits x measurements (last term " << num(r.T_last_term)
    << ", tail estimate " << num(r.T_tail) << ")\n";
  o << "forbidden words (length <= " << r.forbidden_cap << "):";
  if (r.forbidden_words.empty()) o << " none";
  for (const Word& w : r.forbidden_words) o << ' ' << word_to_string(r.alphabet, w);
  o << "\n";
  if (r.deterministic) {
    o << "note: closed-form h_mu is the mean Shannon entropy of the rows of |U_ij|^2; "
         "E and T use it\n";
  } else {
    o << "note: started from the maximally mixed state; E and T use dH(L_max)\n";
  }
  if (r.ergodic_components > 1) {
    o << "note: transition graph has " << r.ergodic_components
      << " closed classes; the uniform stationary state mixes them\n";
  }
  return o.str();
}

std::string format_curve_csv(const InfoReport& r) {
  std::ostringstream o;
  o << "L,H,dH,E_L,T_partial\n";
  const auto& H = r.entropy_curve.H;
  double partial = 0.0;
  for (std::size_t L = 0; L < H.size(); ++L) {
    const double dh = L == 0 ? std::log2(static_cast<double>(r.alphabet.size())) : H[L] - H[L - 1];
    const double e_l = H[L] - r.h_mu * static_cast<double>(L);
    partial += r.E + r.h_mu * static_cast<double>(L) - H[L];
    o << L << ',' << num(H[L]) << ',' << num(dh) << ',' << num(e_l) << ',' << num(partial) << '\n';
  }
  return o.str();
}

std::string format_classical(const ClassicalGenerator& cg) {
  std::ostringstream o;
  for (std::size_t s = 0; s < cg.matrices.size(); ++s) {
    o << "T(" << cg.alphabet[s] << ") =\n";
    for (std::size_t i = 0; i < cg.dim; ++i) {
      o << " ";
      for (std::size_t j = 0; j < cg.dim; ++j) o << ' ' << num(cg.matrices[s](i, j));
      o << "\n";
    }
  }
  o << "stationary:";
  for (double p : cg.stationary) o << ' ' << num(p);
  o << "\n";
  return o.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qproc: intrinsic computation of measured finite-state quantum generators"};
  app.require_subcommand(1);

  Source src;
  RunConfig cfg;
  std::size_t l_max = 0;
  std::string show;

  auto add_common = [&](CLI::App* sub) {
    auto* ex = sub->add_option("--example", src.example, "built-in generator name");
    auto* sp = sub->add_option("--spec", src.spec_path, "generator spec file");
    ex->excludes(sp);
    sub->add_option("--lmax", l_max, "maximum word length");
    sub->add_option("--prune-tol", cfg.prune_tol, "drop prefixes with probability <= tol");
    sub->add_option("--out", cfg.out_dir, "output directory");
  };
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "entropy rate, E, T and S_q");
  add_common(analyze_cmd);
  CLI::App* sample_cmd = app.add_subcommand("sample", "Monte Carlo trajectory and block table");
  add_common(sample_cmd);
  sample_cmd->add_option("--steps", cfg.steps, "number of observed symbols");
  sample_cmd->add_option("--seed", cfg.seed, "64-bit PRNG seed");
  CLI::App* compare_cmd = app.add_subcommand("compare", "classical-equivalent generator check");
  add_common(compare_cmd);
  CLI::App* examples_cmd = app.add_subcommand("examples", "list built-in generators");
  examples_cmd->add_option("--show", show, "print a built-in as a spec file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qproc: error[usage]: " << one_line(e.what()) << "\n";
    return kInvalidInput;
  }

  for (CLI::App* sub : {analyze_cmd, sample_cmd, compare_cmd}) {
    if (sub->count("--lmax") > 0) cfg.l_max = l_max;
  }

  try {
    if (*analyze_cmd) {
      if (cfg.l_max && *cfg.l_max == 0) throw UsageError("--lmax must be >= 1");
      return cmd_analyze(src, cfg, out);
    }
    if (*sample_cmd) return cmd_sample(src, cfg, out);
    if (*compare_cmd) {
      if (cfg.l_max && *cfg.l_max == 0) throw UsageError("--lmax must be >= 1");
      return cmd_compare(src, cfg, out);
    }
    return cmd_examples(show, out);
  } catch (const UsageError& e) {
    err << "qproc: error[usage]: " << one_line(e.what()) << "\n";
    return kInvalidInput;
  } catch (const SpecError& e) {
    err << "qproc: error[parse]: " << one_line(e.what()) << "\n";
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "qproc: error[validation]: " << one_line(e.what()) << "\n";
    return kInvalidInput;
  } catch (const UnsupportedError& e) {
    err << "qproc: error[unsupported]: " << one_line(e.what()) << "\n";
    return kInvalidInput;
  } catch (const ShapeError& e) {
    err << "qproc: error[validation]: " << one_line(e.what()) << "\n";
    return kInvalidInput;
  } catch (const ResourceError& e) {
    err << "qproc: error[resource]: " << one_line(e.what()) << "\n";
    return kResourceCap;
  } catch (const NumericalError& e) {
    err << "qproc: error[numerical]: " << one_line(e.what()) << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << "qproc: error[internal]: " << one_line(e.what()) << "\n";
    return kNumerical;
  }
}

}  // namespace qproc::cli
