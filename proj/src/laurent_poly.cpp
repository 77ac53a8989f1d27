#include "jets/laurent_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jets {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exp) {
  LaurentPoly p;
  p.add_term(coeff, exp);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(c, e);
  return p;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of the zero polynomial");
  return terms_.rbegin()->first;
}

std::optional<std::pair<Rational, int>> LaurentPoly::as_unit() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (x.is_zero() && !terms_.empty() && min_exp() < 0)
    throw std::domain_error("evaluation at 0 of a polynomial with negative exponents");
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * x.pow(e);
  return acc;
}

LaurentPoly LaurentPoly::shifted(int m) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + m, c);
  return p;
}

void LaurentPoly::add_term(const Rational& c, int exp) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ca * cb, ea + eb);
  return p;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending exponent order reads like the usual polynomial notation.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit_coeff = mag == Rational(1);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!unit_coeff) os << mag << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

SubringMembership subring_membership(const LaurentPoly& a) {
  return {a.in_polynomial_ring(), a.in_inverse_ring()};
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly();
  // Strip the monomial parts so both are polynomials with nonzero constant term
  // (for b); long division from the top then decides divisibility.
  const int shift_b = b.min_exp();
  const LaurentPoly divisor = b.shifted(-shift_b);
  LaurentPoly rem = a.shifted(-a.min_exp());
  const int db = divisor.max_exp();
  const Rational lead = divisor.coeff(db);
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= db) {
    const int e = rem.max_exp() - db;
    const Rational c = rem.coeff(rem.max_exp()) / lead;
    quot.add_term(c, e);
    rem -= divisor.shifted(e) * LaurentPoly(c);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(a.min_exp() - shift_b);
}

}  // namespace jets
