#include "nagsb/poly.hpp"

#include <algorithm>
#include <cctype>

#include "nagsb/error.hpp"

namespace nagsb {

namespace {

bool descending(const Term& a, const Term& b) { return compare(a.word, b.word) > 0; }

}  // namespace

Poly Poly::monomial(Word w, Coeff c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({std::move(w), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().word == t.word) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front();
}

const Coeff* Poly::coeff_of(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& x) { return compare(t.word, x) > 0; });
  if (it != terms_.end() && it->word == w) return &it->coeff;
  return nullptr;
}

std::size_t Poly::max_length() const {
  // Longer words sort first.
  return terms_.empty() ? 0 : terms_.front().word.length();
}

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.back().word.length() == terms_.front().word.length();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (&rhs == this) {
    Poly copy = rhs;
    return *this += copy;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.cbegin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    if (a == terms_.end()) {
      merged.push_back(*b++);
      continue;
    }
    auto c = compare(a->word, b->word);
    if (c > 0) {
      merged.push_back(std::move(*a++));
    } else if (c < 0) {
      merged.push_back(*b++);
    } else {
      Coeff sum = a->coeff + b->coeff;
      if (!sum.is_zero()) merged.push_back({std::move(a->word), std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly add(const Poly& f, const Poly& g) { return f + g; }

Poly multiply(const Poly& f, const Poly& g) {
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& a : f) {
    for (const auto& b : g) terms.push_back({Word::node(a.word, b.word), a.coeff * b.coeff});
  }
  return Poly::from_terms(std::move(terms));
}

const Term& leading(const Poly& f) { return f.leading(); }

Poly make_monic(const Poly& f) {
  const Coeff& lc = f.leading_coeff();
  if (lc.is_one()) return f;
  return f * lc.inverse();
}

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
}

Term parse_term(std::string_view text, std::size_t& pos, const Alphabet& alphabet, Field field) {
  std::size_t start = pos;
  if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
      ++pos;
    }
    Coeff c;
    try {
      c = Coeff::parse(text.substr(start, pos - start), field);
    } catch (const ParseError& e) {
      throw ParseError("malformed coefficient", start);
    }
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != '*') throw ParseError("expected '*'", pos);
    ++pos;
    skip_spaces(text, pos);
    Word w = parse_word_at(text, pos, alphabet);
    return {std::move(w), std::move(c)};
  }
  Word w = parse_word_at(text, pos, alphabet);
  return {std::move(w), Coeff::one(field)};
}

}  // namespace

Poly parse_poly(std::string_view text, const Alphabet& alphabet, Field field) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  auto rest = text.substr(pos);
  while (!rest.empty() && rest.back() == ' ') rest.remove_suffix(1);
  if (rest == "0") return {};
  std::vector<Term> terms;
  bool negate = false;
  if (pos < text.size() && text[pos] == '-') {
    negate = true;
    ++pos;
    skip_spaces(text, pos);
  }
  while (true) {
    Term t = parse_term(text, pos, alphabet, field);
    if (negate) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    skip_spaces(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] != '+' && text[pos] != '-') throw ParseError("expected '+' or '-'", pos);
    negate = text[pos] == '-';
    ++pos;
    skip_spaces(text, pos);
  }
  return Poly::from_terms(std::move(terms));
}

std::string render_poly(const Poly& f, const Alphabet& alphabet) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f) {
    bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Coeff magnitude = negative ? -t.coeff : t.coeff;
    out += magnitude.to_string() + "*" + render_word(t.word, alphabet);
    first = false;
  }
  return out;
}

}  // namespace nagsb
