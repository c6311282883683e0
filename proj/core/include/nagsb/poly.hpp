#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nagsb/coeff.hpp"
#include "nagsb/word.hpp"

namespace nagsb {

struct Term {
  Word word;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of the free non-associative algebra: a finite linear combination
/// of words. Terms are stored strictly descending in deg-lex with no zero
/// coefficients, so the leading term is the first one.
class Poly {
 public:
  Poly() = default;

  static Poly monomial(Word w, Coeff c);
  /// Sums duplicate words and drops zeros; input order is irrelevant.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Throws ZeroPolynomial.
  const Term& leading() const;
  const Word& leading_word() const { return leading().word; }
  const Coeff& leading_coeff() const { return leading().coeff; }

  /// Coefficient of `w`, or nullptr when absent.
  const Coeff* coeff_of(const Word& w) const;

  /// Largest word length in the support; 0 for the zero polynomial.
  std::size_t max_length() const;
  bool is_homogeneous() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Coeff& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Coeff& c) { return a *= c; }
  friend Poly operator*(const Coeff& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Term> terms_;
};

Poly add(const Poly& f, const Poly& g);
/// Bilinear extension of (u)(v) = ((u)(v)).
Poly multiply(const Poly& f, const Poly& g);
/// Throws ZeroPolynomial.
const Term& leading(const Poly& f);
/// Throws ZeroPolynomial.
Poly make_monic(const Poly& f);

/// poly := ["-"] term (("+"|"-") term)* | "0"
/// term := [coeff "*"] word
Poly parse_poly(std::string_view text, const Alphabet& alphabet, Field field = {});
/// Canonical rendering, e.g. "1*((x1 x2) x3) - 1*(x1 (x2 x3))"; "0" for zero.
std::string render_poly(const Poly& f, const Alphabet& alphabet);

}  // namespace nagsb
