#include "qproc/specfile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qproc {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<double> read_double(std::string_view s, std::size_t& consumed) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{}) return std::nullopt;
  consumed = static_cast<std::size_t>(ptr - s.data());
  return v;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, ptr);
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

std::size_t parse_count(std::string_view s, std::size_t line, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw SpecError(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

enum class Section { None, Generator, Unitary, Projector, Protocol };

struct ProjectorDraft {
  std::string symbol;
  std::size_t line = 0;
  std::optional<std::vector<std::size_t>> basis;
  std::vector<std::vector<Complex>> rows;
};

}  // namespace

Complex parse_complex(std::string_view lit) {
  auto fail = [&]() -> Complex {
    throw std::invalid_argument("invalid complex literal '" + std::string(lit) + "'");
  };
  if (lit.empty()) return fail();
  std::size_t n = 0;
  const auto first = read_double(lit, n);
  if (!first) {
    // bare "i", "+i", "-i"
    if (lit == "i" || lit == "+i") return {0.0, 1.0};
    if (lit == "-i") return {0.0, -1.0};
    return fail();
  }
  std::string_view rest = lit.substr(n);
  if (rest.empty()) return {*first, 0.0};
  if (rest == "i") return {0.0, *first};
  if (rest.back() != 'i' || (rest[0] != '+' && rest[0] != '-')) return fail();
  std::string_view im = rest.substr(0, rest.size() - 1);
  if (im == "+" || im == "-") return {*first, im == "+" ? 1.0 : -1.0};
  std::size_t m = 0;
  const auto second = read_double(im, m);
  if (!second || m != im.size()) return fail();
  return {*first, *second};
}

std::string format_complex(Complex z) {
  std::string re = format_double(z.real());
  std::string im = format_double(z.imag());
  if (im[0] != '-') im.insert(im.begin(), '+');
  return re + im + "i";
}

GeneratorSpec parse_spec(std::string_view text) {
  Section section = Section::None;
  std::optional<std::string> name;
  std::optional<std::size_t> dimension;
  std::optional<std::vector<std::string>> alphabet;
  std::size_t generator_line = 0;
  std::vector<std::vector<Complex>> unitary_rows;
  std::size_t unitary_line = 0;
  std::vector<ProjectorDraft> projectors;
  std::optional<std::string> pattern;
  std::size_t protocol_line = 0;
  bool seen_unitary = false;
  bool seen_protocol = false;

  auto parse_row = [&](std::string_view value, std::size_t line) {
    std::vector<Complex> row;
    for (std::string_view tok : split_ws(value)) {
      try {
        row.push_back(parse_complex(tok));
      } catch (const std::invalid_argument& e) {
        throw SpecError(line, e.what());
      }
    }
    if (row.size() != *dimension) {
      throw SpecError(line, "row has " + std::to_string(row.size()) + " entries, expected " +
                                std::to_string(*dimension));
    }
    return row;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw SpecError(line_no, "unterminated section header");
      const auto header = split_ws(line.substr(1, line.size() - 2));
      if (header.empty()) throw SpecError(line_no, "empty section header");
      const std::string_view kind = header[0];
      if (kind == "generator" && header.size() == 1) {
        if (section != Section::None) throw SpecError(line_no, "[generator] must come first");
        section = Section::Generator;
        generator_line = line_no;
      } else if (kind == "unitary" && header.size() == 1) {
        if (section != Section::Generator) {
          throw SpecError(line_no, "[unitary] must follow [generator]");
        }
        if (!name || !dimension || !alphabet) {
          throw SpecError(line_no, "[generator] needs name, dimension and alphabet");
        }
        section = Section::Unitary;
        seen_unitary = true;
        unitary_line = line_no;
      } else if (kind == "projector" && header.size() == 2) {
        if (section != Section::Unitary && section != Section::Projector) {
          throw SpecError(line_no, "[projector] must follow [unitary]");
        }
        if (section == Section::Unitary && unitary_rows.size() != *dimension) {
          throw SpecError(line_no, "[unitary] has " + std::to_string(unitary_rows.size()) +
                                       " rows, expected " + std::to_string(*dimension));
        }
        const std::string symbol(header[1]);
        if (std::find(alphabet->begin(), alphabet->end(), symbol) == alphabet->end()) {
          throw SpecError(line_no, "projector for unknown symbol '" + symbol + "'");
        }
        for (const auto& p : projectors) {
          if (p.symbol == symbol) throw SpecError(line_no, "duplicate projector '" + symbol + "'");
        }
        projectors.push_back({symbol, line_no, std::nullopt, {}});
        section = Section::Projector;
      } else if (kind == "protocol" && header.size() == 1) {
        if (section != Section::Projector) {
          throw SpecError(line_no, "[protocol] must follow the projector sections");
        }
        section = Section::Protocol;
        seen_protocol = true;
        protocol_line = line_no;
      } else {
        throw SpecError(line_no, "unknown section '" + std::string(line) + "'");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SpecError(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    switch (section) {
      case Section::None:
        throw SpecError(line_no, "key outside of any section");
      case Section::Generator:
        if (key == "name") {
          name = std::string(value);
        } else if (key == "dimension") {
          dimension = parse_count(value, line_no, "dimension");
          if (*dimension == 0) throw SpecError(line_no, "dimension must be positive");
        } else if (key == "alphabet") {
          alphabet.emplace();
          for (auto tok : split_ws(value)) alphabet->emplace_back(tok);
          if (alphabet->empty()) throw SpecError(line_no, "empty alphabet");
        } else {
          throw SpecError(line_no, "unknown key '" + std::string(key) + "' in [generator]");
        }
        break;
      case Section::Unitary:
        if (key != "row") throw SpecError(line_no, "expected 'row = ...' in [unitary]");
        if (unitary_rows.size() == *dimension) throw SpecError(line_no, "too many unitary rows");
        unitary_rows.push_back(parse_row(value, line_no));
        break;
      case Section::Projector: {
        ProjectorDraft& p = projectors.back();
        if (key == "basis") {
          if (p.basis || !p.rows.empty()) {
            throw SpecError(line_no, "projector '" + p.symbol + "' defined twice");
          }
          std::vector<std::size_t> idx;
          for (auto tok : split_ws(value)) {
            const std::size_t i = parse_count(tok, line_no, "basis index");
            if (i >= *dimension) {
              throw SpecError(line_no, "basis index " + std::to_string(i) + " out of range");
            }
            idx.push_back(i);
          }
          p.basis = std::move(idx);
        } else if (key == "row") {
          if (p.basis) throw SpecError(line_no, "projector '" + p.symbol + "' mixes basis and rows");
          if (p.rows.size() == *dimension) throw SpecError(line_no, "too many projector rows");
          p.rows.push_back(parse_row(value, line_no));
        } else {
          throw SpecError(line_no, "unknown key '" + std::string(key) + "' in [projector]");
        }
        break;
      }
      case Section::Protocol:
        if (key != "pattern") throw SpecError(line_no, "expected 'pattern = ...' in [protocol]");
        pattern = std::string(value);
        break;
    }
  }

  if (!seen_unitary) throw SpecError(generator_line, "missing [unitary] section");
  if (unitary_rows.size() != *dimension) {
    throw SpecError(unitary_line, "[unitary] has " + std::to_string(unitary_rows.size()) +
                                      " rows, expected " + std::to_string(*dimension));
  }
  if (!seen_protocol || !pattern) throw SpecError(0, "missing [protocol] pattern");

  const std::size_t n = *dimension;
  std::vector<Complex> flat;
  for (const auto& r : unitary_rows) flat.insert(flat.end(), r.begin(), r.end());
  CMatrix unitary(n, n, std::move(flat));

  std::vector<CMatrix> mats;
  for (const std::string& symbol : *alphabet) {
    auto it = std::find_if(projectors.begin(), projectors.end(),
                           [&](const ProjectorDraft& p) { return p.symbol == symbol; });
    if (it == projectors.end()) throw SpecError(0, "missing projector for symbol '" + symbol + "'");
    if (it->basis) {
      CMatrix p(n, n);
      for (std::size_t i : *it->basis) p(i, i) = 1.0;
      mats.push_back(std::move(p));
    } else {
      if (it->rows.size() != n) {
        throw SpecError(it->line, "projector '" + symbol + "' has " +
                                      std::to_string(it->rows.size()) + " rows, expected " +
                                      std::to_string(n));
      }
      std::vector<Complex> pf;
      for (const auto& r : it->rows) pf.insert(pf.end(), r.begin(), r.end());
      mats.emplace_back(n, n, std::move(pf));
    }
  }

  std::optional<MeasurementProtocol> protocol;
  try {
    protocol = MeasurementProtocol::parse(*pattern);
  } catch (const std::invalid_argument& e) {
    throw SpecError(protocol_line, e.what());
  }
  try {
    return GeneratorSpec{QuantumGenerator::build(std::move(unitary), std::move(mats), *alphabet, *name),
                         *protocol};
  } catch (const ValidationError& e) {
    throw SpecError(generator_line, std::string("[generator] validation failed: ") + e.what());
  }
}

std::string serialize_spec(const GeneratorSpec& spec) {
  const QuantumGenerator& g = spec.generator;
  const std::size_t n = g.dim();
  std::ostringstream out;
  out << "[generator]\n";
  out << "name = " << g.name() << "\n";
  out << "dimension = " << n << "\n";
  out << "alphabet =";
  for (const auto& s : g.alphabet()) out << ' ' << s;
  out << "\n[unitary]\n";
  auto write_rows = [&](const CMatrix& m) {
    for (std::size_t i = 0; i < n; ++i) {
      out << "row =";
      for (std::size_t j = 0; j < n; ++j) out << ' ' << format_complex(m(i, j));
      out << '\n';
    }
  };
  write_rows(g.unitary());
  for (std::size_t s = 0; s < g.alphabet_size(); ++s) {
    const CMatrix& p = g.projector(static_cast<SymbolIndex>(s));
    out << "[projector " << g.alphabet()[s] << "]\n";
    bool diagonal01 = true;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < n && diagonal01; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Complex z = p(i, j);
        if (i != j && z != Complex{}) diagonal01 = false;
        if (i == j && z != Complex{} && z != Complex{1.0}) diagonal01 = false;
      }
      if (p(i, i) == Complex{1.0}) basis.push_back(i);
    }
    if (diagonal01) {
      out << "basis =";
      for (std::size_t i : basis) out << ' ' << i;
      out << '\n';
    } else {
      write_rows(p);
    }
  }
  out << "[protocol]\n";
  out << "pattern = " << spec.protocol.to_string() << "\n";
  return out.str();
}

}  // namespace qproc
