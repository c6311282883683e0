#include "nagsb/word.hpp"

#include <cctype>
#include <limits>

#include "nagsb/error.hpp"

namespace nagsb {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !is_name_start(n.front())) {
      throw ParseError("invalid generator name '" + n + "'", 0);
    }
    for (char c : n) {
      if (!is_name_char(c)) throw ParseError("invalid generator name '" + n + "'", 0);
    }
    if (!ids_.emplace(n, static_cast<std::uint32_t>(i)).second) {
      throw ParseError("duplicate generator name '" + n + "'", 0);
    }
  }
}

Alphabet Alphabet::indexed(std::size_t size, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t i = 0; i < size; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Alphabet(std::move(names));
}

Generator Alphabet::lookup(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) throw ParseError("unknown generator '" + std::string(name) + "'", 0);
  return Generator{it->second};
}

bool Alphabet::contains(std::string_view name) const {
  return ids_.contains(std::string(name));
}

std::string render_position(const Position& pos) {
  if (pos.empty()) return "root";
  std::string out;
  for (Side s : pos) out += s == Side::Left ? 'L' : 'R';
  return out;
}

Word Word::leaf(Generator g) {
  auto n = std::make_shared<Node>();
  n->letter = g;
  n->length = 1;
  n->hash = mix(0x51ed27, g.id);
  return Word(std::move(n));
}

Word Word::node(Word left, Word right) {
  auto n = std::make_shared<Node>();
  n->length = left.length() + right.length();
  n->hash = mix(mix(0xa11ce, left.hash()), right.hash());
  n->left = std::make_shared<const Word>(std::move(left));
  n->right = std::make_shared<const Word>(std::move(right));
  return Word(std::move(n));
}

const Word* Word::subtree(std::span<const Side> pos) const {
  const Word* w = this;
  for (Side s : pos) {
    if (w->is_leaf()) return nullptr;
    w = s == Side::Left ? &w->left() : &w->right();
  }
  return w;
}

Word Word::replace(std::span<const Side> pos, const Word& filler) const {
  if (pos.empty()) return filler;
  if (is_leaf()) throw MalformedContext("position " +
                                        render_position(Position(pos.begin(), pos.end())) +
                                        " runs past a leaf");
  auto rest = pos.subspan(1);
  if (pos.front() == Side::Left) return node(left().replace(rest, filler), right());
  return node(left(), right().replace(rest, filler));
}

std::vector<Generator> Word::flatten() const {
  std::vector<Generator> out;
  out.reserve(length());
  std::vector<const Word*> stack{this};
  while (!stack.empty()) {
    const Word* w = stack.back();
    stack.pop_back();
    if (w->is_leaf()) {
      out.push_back(w->generator());
    } else {
      stack.push_back(&w->right());
      stack.push_back(&w->left());
    }
  }
  return out;
}

void Word::for_each_subtree(
    const std::function<void(const Position&, const Word&)>& visit) const {
  Position pos;
  auto walk = [&](auto&& self, const Word& w) -> void {
    visit(pos, w);
    if (w.is_leaf()) return;
    pos.push_back(Side::Left);
    self(self, w.left());
    pos.back() = Side::Right;
    self(self, w.right());
    pos.pop_back();
  };
  walk(walk, *this);
}

bool operator==(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.length() != b.length()) return false;
  if (a.is_leaf() || b.is_leaf()) {
    return a.is_leaf() && b.is_leaf() && a.generator() == b.generator();
  }
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering compare(const Word& u, const Word& v) {
  if (u.length() != v.length()) return u.length() <=> v.length();
  if (u.is_leaf()) return u.generator() <=> v.generator();
  if (auto c = compare(u.left(), v.left()); c != 0) return c;
  return compare(u.right(), v.right());
}

std::strong_ordering operator<=>(const Word& a, const Word& b) { return compare(a, b); }

Word parse_word_at(std::string_view text, std::size_t& pos, const Alphabet& alphabet) {
  if (pos >= text.size()) throw ParseError("unexpected end of word", pos);
  if (text[pos] == '(') {
    ++pos;
    Word left = parse_word_at(text, pos, alphabet);
    if (pos >= text.size() || text[pos] != ' ') throw ParseError("expected single space", pos);
    ++pos;
    Word right = parse_word_at(text, pos, alphabet);
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    return Word::node(std::move(left), std::move(right));
  }
  if (!is_name_start(text[pos])) throw ParseError("expected generator name or '('", pos);
  std::size_t start = pos;
  while (pos < text.size() && is_name_char(text[pos])) ++pos;
  auto name = text.substr(start, pos - start);
  if (!alphabet.contains(name)) {
    throw ParseError("unknown generator '" + std::string(name) + "'", start);
  }
  return Word::leaf(alphabet.lookup(name));
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::size_t pos = 0;
  Word w = parse_word_at(text, pos, alphabet);
  if (pos != text.size()) throw ParseError("trailing characters after word", pos);
  return w;
}

std::string render_word(const Word& u, const Alphabet& alphabet) {
  if (u.is_leaf()) return alphabet.name(u.generator());
  return "(" + render_word(u.left(), alphabet) + " " + render_word(u.right(), alphabet) + ")";
}

std::size_t word_count(std::size_t alphabet_size, std::size_t degree) {
  constexpr auto max = std::numeric_limits<std::size_t>::max();
  if (degree == 0) return 0;
  // Catalan numbers by the shape recurrence, saturating.
  std::vector<std::size_t> shapes(degree + 1, 0);
  shapes[1] = 1;
  for (std::size_t d = 2; d <= degree; ++d) {
    std::size_t total = 0;
    for (std::size_t a = 1; a < d; ++a) {
      std::size_t l = shapes[a], r = shapes[d - a];
      std::size_t prod = (r != 0 && l > max / r) ? max : l * r;
      total = (total > max - prod) ? max : total + prod;
    }
    shapes[d] = total;
  }
  std::size_t count = shapes[degree];
  for (std::size_t i = 0; i < degree; ++i) {
    count = (alphabet_size != 0 && count > max / alphabet_size) ? max : count * alphabet_size;
  }
  return count;
}

std::vector<Word> enumerate_words(std::size_t alphabet_size, std::size_t degree,
                                  EnumerationLimits limits) {
  if (degree == 0) throw PreconditionViolated("word degree must be at least 1");
  std::size_t total = 0;
  for (std::size_t d = 1; d <= degree; ++d) {
    std::size_t c = word_count(alphabet_size, d);
    total = c > limits.max_words ? c : total + c;
    if (total > limits.max_words) {
      throw ResourceCapExceeded("enumerating degree " + std::to_string(degree) +
                                " words exceeds the cap of " +
                                std::to_string(limits.max_words));
    }
  }
  // by_degree[d] is increasing; concatenating over left lengths 1..d-1 keeps
  // the result increasing because a longer left factor is greater.
  std::vector<std::vector<Word>> by_degree(degree + 1);
  for (std::uint32_t g = 0; g < alphabet_size; ++g) by_degree[1].push_back(Word::leaf({g}));
  for (std::size_t d = 2; d <= degree; ++d) {
    auto& out = by_degree[d];
    out.reserve(word_count(alphabet_size, d));
    for (std::size_t a = 1; a < d; ++a) {
      for (const auto& l : by_degree[a]) {
        for (const auto& r : by_degree[d - a]) out.push_back(Word::node(l, r));
      }
    }
  }
  return std::move(by_degree[degree]);
}

}  // namespace nagsb
