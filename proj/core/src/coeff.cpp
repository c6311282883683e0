#include "nagsb/coeff.hpp"

#include <charconv>

#include "nagsb/error.hpp"

namespace nagsb {

Field Field::prime(std::uint64_t p) {
  mpz_class z(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw Error("characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "rational") return rationals();
  constexpr std::string_view prefix = "prime:";
  if (spec.substr(0, prefix.size()) == prefix) {
    auto digits = spec.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime(p);
    }
  }
  throw Error("unknown coefficient field '" + std::string(spec) +
              "' (expected rational or prime:P)");
}

std::string Field::name() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(modulus_);
}

Coeff::Coeff(long value, Field field) : value_(value), field_(field) { reduce(); }

Coeff::Coeff(const mpq_class& value, Field field) : value_(value), field_(field) {
  reduce();
}

Coeff Coeff::parse(std::string_view text, Field field) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  auto num = body.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw ParseError("malformed coefficient '" + std::string(text) + "'", 0);
  }
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  if (negative) n = -n;
  if (!field.is_rational()) {
    mpz_class p(static_cast<unsigned long>(field.characteristic()));
    mpz_class dr = d % p;
    if (dr == 0) {
      throw Error("denominator of '" + std::string(text) + "' vanishes in " + field.name());
    }
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), p.get_mpz_t());
    return Coeff(mpq_class(n * inv), field);
  }
  return Coeff(mpq_class(n, d), field);
}

void Coeff::reduce() {
  value_.canonicalize();
  if (field_.is_rational()) return;
  mpz_class p(static_cast<unsigned long>(field_.characteristic()));
  mpz_class num = value_.get_num();
  mpz_class den = value_.get_den();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw Error("value is not defined in " + field_.name());
    }
    num *= inv;
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  value_ = mpq_class(r);
}

void Coeff::check_field(const Coeff& other) const {
  if (field_ != other.field_) throw FieldMismatch();
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Coeff r = *this;
  r.value_ = 1 / value_;
  r.reduce();
  return r;
}

Coeff& Coeff::operator+=(const Coeff& rhs) {
  check_field(rhs);
  value_ += rhs.value_;
  if (!field_.is_rational()) reduce();
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& rhs) {
  check_field(rhs);
  value_ -= rhs.value_;
  if (!field_.is_rational()) reduce();
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& rhs) {
  check_field(rhs);
  value_ *= rhs.value_;
  if (!field_.is_rational()) reduce();
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& rhs) {
  check_field(rhs);
  return *this *= rhs.inverse();
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  r.value_ = -value_;
  r.reduce();
  return r;
}

std::string Coeff::to_string() const { return value_.get_str(); }

}  // namespace nagsb
