#pragma once

/**
 * @file laurent_poly.hpp
 * @brief Laurent polynomials in one variable over Q.
 *
 * A LaurentPoly is a finite map exponent -> nonzero Rational. Zero
 * coefficients are never stored, so the zero polynomial is the empty map and
 * structural equality coincides with mathematical equality.
 *
 * The same type holds elements of Q[t], Q[t^-1] and Q[t, t^-1]; chart
 * variables (t, u, s = 1/t, v = 1/u) are all the single formal variable.
 */

#include "jets/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace jets {

class LaurentPoly {
public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) : LaurentPoly(Rational(c)) {}  // NOLINT: implicit constant
  LaurentPoly(const Rational& c);                             // NOLINT: implicit constant

  static LaurentPoly monomial(const Rational& coeff, int exp);
  static LaurentPoly from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of t^exp (zero when absent).
  Rational coeff(int exp) const;

  /// Smallest / largest exponent present; throw std::domain_error on zero.
  int min_exp() const;
  int max_exp() const;

  /// (c, m) iff *this == c * t^m with c != 0.
  std::optional<std::pair<Rational, int>> as_unit() const;

  bool in_polynomial_ring() const { return is_zero() || min_exp() >= 0; }
  bool in_inverse_ring() const { return is_zero() || max_exp() <= 0; }

  /// Evaluate at a rational point; x = 0 with negative exponents is a domain error.
  Rational evaluate(const Rational& x) const;

  /// Multiply by t^m.
  LaurentPoly shifted(int m) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Add c * t^exp in place.
  void add_term(const Rational& c, int exp);

  /// Human-readable form, e.g. "-t^-2 + 3*t", using `var` as the variable name.
  std::string to_string(const std::string& var = "t") const;

private:
  Terms terms_;
};

/// Flags for membership in the chart rings Q[t] and Q[t^-1].
struct SubringMembership {
  bool in_polynomial_ring;
  bool in_inverse_ring;
  friend bool operator==(const SubringMembership&, const SubringMembership&) = default;
};

SubringMembership subring_membership(const LaurentPoly& a);

/// is_unit as a free function: (c, m) iff a == c * t^m.
inline std::optional<std::pair<Rational, int>> is_unit(const LaurentPoly& a) { return a.as_unit(); }

/// Exact quotient a / b in Q[t, t^-1]; empty if b does not divide a (or b == 0).
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace jets
