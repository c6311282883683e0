#include "io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace nagsb::io {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  return in;
}

std::size_t parse_index(const std::string& tok, const std::string& source, std::size_t line) {
  std::size_t value = 0;
  std::size_t used = 0;
  try {
    if (tok.empty() || tok.front() == '-' || tok.front() == '+') throw std::invalid_argument(tok);
    value = std::stoul(tok, &used);
  } catch (const std::exception&) {
    fail(source, line, "expected a non-negative index, got '" + tok + "'");
  }
  if (used != tok.size()) fail(source, line, "expected a non-negative index, got '" + tok + "'");
  return value;
}

}  // namespace

RelationSet read_presentation(std::istream& in, Field field, const std::string& source) {
  std::optional<Alphabet> alphabet;
  std::vector<Poly> relations;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = strip_comment(raw);
    if (text.empty()) continue;
    if (!alphabet) {
      constexpr std::string_view key = "generators:";
      if (text.compare(0, key.size(), key) != 0) {
        fail(source, line, "expected 'generators:' before any relation");
      }
      try {
        alphabet = Alphabet(split(text.substr(key.size())));
      } catch (const Error& e) {
        fail(source, line, e.what());
      }
      if (alphabet->size() == 0) fail(source, line, "empty generator list");
      continue;
    }
    Poly p;
    try {
      p = parse_poly(text, *alphabet, field);
    } catch (const Error& e) {
      fail(source, line, e.what());
    }
    if (p.is_zero()) fail(source, line, "relation is the zero polynomial");
    relations.push_back(std::move(p));
  }
  if (!alphabet) fail(source, line, "missing 'generators:' line");
  return RelationSet(std::move(*alphabet), field, std::move(relations));
}

RelationSet load_presentation(const std::filesystem::path& path, Field field) {
  auto in = open(path);
  return read_presentation(in, field, path.string());
}

std::string render_presentation(const RelationSet& s) {
  std::string out = "generators:";
  for (const auto& n : s.alphabet().names()) out += " " + n;
  out += "\n";
  for (const auto& r : s.relations()) out += render_poly(r, s.alphabet()) + "\n";
  return out;
}

AkivisAlgebra read_akivis(std::istream& in, const AkivisLoadOptions& options,
                          const std::string& source) {
  std::optional<std::size_t> dim;
  std::optional<AkivisAlgebra> algebra;
  std::optional<MultiplicationTable> table;
  std::set<std::vector<std::size_t>> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = strip_comment(raw);
    if (text.empty()) continue;
    auto tok = split(text);
    if (!dim) {
      if (tok.size() != 2 || tok[0] != "dim:") fail(source, line, "expected 'dim: n' first");
      dim = parse_index(tok[1], source, line);
      continue;
    }
    const std::string& kind = tok[0];
    std::size_t arity = kind == "alpha" || kind == "gamma" ? 3 : kind == "beta" ? 4 : 0;
    if (arity == 0) fail(source, line, "unknown entry '" + kind + "'");
    if (tok.size() != arity + 2) {
      fail(source, line, "'" + kind + "' takes " + std::to_string(arity) + " indices and a value");
    }
    std::vector<std::size_t> idx;
    for (std::size_t t = 1; t <= arity; ++t) {
      idx.push_back(parse_index(tok[t], source, line));
      if (idx.back() >= *dim) fail(source, line, "index " + tok[t] + " out of range for dim " + std::to_string(*dim));
    }
    Coeff value;
    try {
      value = Coeff::parse(tok.back(), options.field);
    } catch (const Error& e) {
      fail(source, line, e.what());
    }
    std::vector<std::size_t> key = idx;
    key.insert(key.begin(), arity * 10 + (kind == "gamma" ? 1 : 0));
    if (!seen.insert(key).second) fail(source, line, "duplicate " + kind + " entry");

    if (kind == "gamma") {
      if (algebra) fail(source, line, "gamma entries cannot be mixed with alpha/beta entries");
      if (!table) table.emplace(*dim, options.field);
      table->set(idx[0], idx[1], idx[2], std::move(value));
      continue;
    }
    if (table) fail(source, line, "alpha/beta entries cannot be mixed with gamma entries");
    if (!algebra) algebra.emplace(*dim, options.field);
    if (kind == "alpha") {
      if (idx[0] <= idx[1]) {
        fail(source, line, "alpha entries need i > j (got i=" + tok[1] + ", j=" + tok[2] +
                               "); the bracket is completed by skew-symmetry");
      }
      algebra->set_bracket(idx[0], idx[1], idx[2], std::move(value));
    } else {
      algebra->set_ternary(idx[0], idx[1], idx[2], idx[3], std::move(value));
    }
  }
  if (!dim) fail(source, line, "missing 'dim: n' line");
  AkivisAlgebra result = table ? akivis_from_algebra(*table)
                         : algebra ? std::move(*algebra)
                                   : AkivisAlgebra(*dim, options.field);
  if (options.check_identity) {
    if (auto v = check_akivis_identity(result)) {
      throw InputError(source + ": Akivis identity fails on (e" + std::to_string(v->i) + ", e" +
                       std::to_string(v->j) + ", e" + std::to_string(v->k) + ")");
    }
  }
  return result;
}

AkivisAlgebra load_akivis(const std::filesystem::path& path, const AkivisLoadOptions& options) {
  auto in = open(path);
  return read_akivis(in, options, path.string());
}

}  // namespace nagsb::io
