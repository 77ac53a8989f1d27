#include "jets/jet_transition.hpp"

#include <sstream>
#include <stdexcept>

namespace jets {

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw std::invalid_argument("side must be 'left' or 'right', got '" + s + "'");
}

JetSpec::JetSpec(int N_, int k_, int d_, Side side_) : N(N_), k(k_), d(d_), side(side_) {
  if (N < 1) throw std::invalid_argument("JetSpec: N must be >= 1");
  if (k < 0) throw std::invalid_argument("JetSpec: k must be >= 0");
}

std::string JetSpec::to_string() const {
  std::ostringstream os;
  os << "(N=" << N << ", " << jets::to_string(side) << ", k=" << k << ", d=" << d << ")";
  return os.str();
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    // r * (a - b + i) is divisible by i after the multiplication.
    std::int64_t num;
    if (__builtin_mul_overflow(r, a - b + i, &num)) throw std::overflow_error("binomial overflow");
    r = num / i;
  }
  return r;
}

namespace {

std::int64_t sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

// ds^p (x) x1^d expanded in dt^j (x) x0^d when the column lies in the
// "negative" regime: (-1)^j C(j-d-1, p-d-1) t^(d-p-j).
void fill_left_negative_column(LaurentMatrix& m, int k, int d, int p) {
  for (int j = p; j <= k; ++j) {
    const std::int64_t c = sign_pow(j) * binomial(j - d - 1, p - d - 1);
    m(j, p) = LaurentPoly::monomial(Rational(c), d - p - j);
  }
}

// Polynomial regime: (-1)^p C(d-p, j-p) t^(d-p-j), rows j = p..min(k, d).
void fill_left_polynomial_column(LaurentMatrix& m, int k, int d, int p) {
  for (int j = p; j <= k; ++j) {
    const std::int64_t c = sign_pow(p) * binomial(d - p, j - p);
    m(j, p) = LaurentPoly::monomial(Rational(c), d - p - j);
  }
}

}  // namespace

LaurentMatrix build_left_matrix(int k, int d) {
  if (k < 0) throw std::invalid_argument("jet order k must be >= 0");
  LaurentMatrix m(k + 1, k + 1);
  for (int p = 0; p <= k; ++p) {
    if (d < 0 || p > d) fill_left_negative_column(m, k, d, p);
    else fill_left_polynomial_column(m, k, d, p);
  }
  return m;
}

LaurentMatrix build_right_matrix(int k, int d) {
  if (k < 0) throw std::invalid_argument("jet order k must be >= 0");
  LaurentMatrix m(k + 1, k + 1);
  m(0, 0) = LaurentPoly::monomial(Rational(1), d);
  for (int p = 1; p <= k; ++p)
    for (int j = p; j <= k; ++j) {
      const std::int64_t c = sign_pow(j) * binomial(j - 1, p - 1);
      m(j, p) = LaurentPoly::monomial(Rational(c), d - p - j);
    }
  return m;
}

LaurentMatrix build_matrix(int k, int d, Side side) {
  return side == Side::Left ? build_left_matrix(k, d) : build_right_matrix(k, d);
}

bool verify_cocycle(const LaurentMatrix& m) { return is_gl_laurent(gl_class(m)); }

bool truncation_check(int k, int d, Side side) {
  if (k < 1) throw std::invalid_argument("truncation_check needs k >= 1");
  const LaurentMatrix full = build_matrix(k, d, side);
  const LaurentMatrix lower = build_matrix(k - 1, d, side);
  if (full.submatrix(0, k, 0, k) != lower) return false;
  auto corner = full(k, k).as_unit();
  return corner && corner->second == d - 2 * k;
}

int predicted_det_exponent(int k, int d) { return (k + 1) * d - k * (k + 1); }

}  // namespace jets
