#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers backed by GMP.
 *
 * Values are always stored reduced with a positive denominator, so two
 * rationals compare equal iff their numerators and denominators agree.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace jets {

class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(mpq_class q);

  /// Parse from decimal numerator/denominator strings; throws std::invalid_argument.
  static Rational from_strings(const std::string& num, const std::string& den);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (domain error on 0^-n).
  Rational pow(std::int64_t e) const;

  std::string to_string() const { return value_.get_str(); }

private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace jets
