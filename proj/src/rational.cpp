#include "jets/rational.hpp"

#include <stdexcept>

namespace jets {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Rational Rational::from_strings(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw std::invalid_argument("malformed rational: " + num + "/" + den);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(std::int64_t e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace jets
