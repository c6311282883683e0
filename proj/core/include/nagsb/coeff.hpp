#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nagsb {

/// Coefficient field: the rationals (characteristic 0) or GF(p).
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws Error unless `p` is prime.
  static Field prime(std::uint64_t p);
  /// Accepts "rational" or "prime:P".
  static Field parse(std::string_view spec);

  constexpr std::uint64_t characteristic() const { return modulus_; }
  constexpr bool is_rational() const { return modulus_ == 0; }

  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals are kept canonical by GMP; in GF(p)
/// the value is the representative in [0, p).
class Coeff {
 public:
  Coeff() = default;
  Coeff(long value, Field field = {});
  Coeff(const mpq_class& value, Field field = {});

  static Coeff zero(Field field) { return Coeff(0L, field); }
  static Coeff one(Field field) { return Coeff(1L, field); }
  /// coeff := ["-"] integer ["/" positive-integer]
  static Coeff parse(std::string_view text, Field field = {});

  Field field() const { return field_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  /// Sign used for rendering; GF(p) elements are never negative.
  int sign() const { return sgn(value_); }

  Coeff inverse() const;

  Coeff& operator+=(const Coeff& rhs);
  Coeff& operator-=(const Coeff& rhs);
  Coeff& operator*=(const Coeff& rhs);
  Coeff& operator/=(const Coeff& rhs);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  Coeff operator-() const;

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Coeff& c) {
    return os << c.to_string();
  }

 private:
  void check_field(const Coeff& other) const;
  void reduce();

  mpq_class value_{0};
  Field field_{};
};

}  // namespace nagsb
