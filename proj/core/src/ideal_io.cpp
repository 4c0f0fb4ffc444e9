#include "monospread/ideal_io.hpp"

#include <charconv>
#include <optional>

#include "monospread/error.hpp"

namespace mspread {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

long long parse_integer(std::string_view tok, std::size_t line) {
  long long value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorKind::Overflow, "integer '" + std::string(tok) + "' out of range", line);
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::SyntaxError, "expected an integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

}  // namespace

ParsedIdeal parse_ideal(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::optional<std::size_t> ambient;
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::vector<std::string_view> toks = tokens(line);
    if (toks.empty()) continue;

    if (!ambient) {
      if (toks.size() != 2 || toks[0] != "n") {
        throw Error(ErrorKind::SyntaxError, "expected header 'n <variables>'", line_no);
      }
      const long long n = parse_integer(toks[1], line_no);
      if (n <= 0) throw Error(ErrorKind::SyntaxError, "number of variables must be positive", line_no);
      ambient = static_cast<std::size_t>(n);
      continue;
    }
    if (toks.size() != *ambient) {
      throw Error(ErrorKind::WidthMismatch, "expected " + std::to_string(*ambient) + " exponents, got " +
                                                std::to_string(toks.size()),
                  line_no);
    }
    std::vector<long long> exps;
    exps.reserve(toks.size());
    for (std::string_view tok : toks) exps.push_back(parse_integer(tok, line_no));
    try {
      gens.push_back(Monomial::from_exponents(exps));
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), line_no);
    }
    if (gens.back().is_unit()) throw Error(ErrorKind::UnitGenerator, "the unit ideal is not supported", line_no);
  }
  if (!ambient) throw Error(ErrorKind::SyntaxError, "missing header 'n <variables>'", line_no);
  if (gens.empty()) throw Error(ErrorKind::ZeroIdeal, "no generators (empty ideal)");

  std::vector<Monomial> dropped;
  std::vector<Monomial> kept = minimalize(gens, &dropped);
  return ParsedIdeal{MonomialIdeal(*ambient, std::move(kept)), std::move(dropped)};
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "n " + std::to_string(ideal.ambient()) + "\n";
  for (const Monomial& g : ideal.generators()) {
    for (std::size_t j = 0; j < g.ambient(); ++j) {
      if (j != 0) out += ' ';
      out += std::to_string(g[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mspread
