#include "jets/laurent_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace jets {

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw DimensionMismatch("entry count does not match rows*cols");
}

LaurentMatrix::LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<LaurentPoly>& diag) {
  LaurentMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

LaurentMatrix LaurentMatrix::submatrix(std::size_t r0, std::size_t nr, std::size_t c0,
                                       std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("submatrix out of range");
  LaurentMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

LaurentMatrix LaurentMatrix::minor_matrix(std::size_t i0, std::size_t j0) const {
  if (rows_ < 2 || cols_ < 2) throw DimensionMismatch("minor of a matrix with a unit dimension");
  LaurentMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
    if (i == i0) continue;
    for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
      if (j == j0) continue;
      m(mi, mj++) = (*this)(i, j);
    }
    ++mi;
  }
  return m;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& s) const {
  LaurentMatrix m(*this);
  for (auto& e : m.entries_) e = e * s;
  return m;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool LaurentMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool LaurentMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

int LaurentMatrix::min_exp() const {
  bool any = false;
  int lo = 0;
  for (const auto& e : entries_) {
    if (e.is_zero()) continue;
    lo = any ? std::min(lo, e.min_exp()) : e.min_exp();
    any = true;
  }
  if (!any) throw std::domain_error("exponent range of the zero matrix");
  return lo;
}

int LaurentMatrix::max_exp() const {
  bool any = false;
  int hi = 0;
  for (const auto& e : entries_) {
    if (e.is_zero()) continue;
    hi = any ? std::max(hi, e.max_exp()) : e.max_exp();
    any = true;
  }
  if (!any) throw std::domain_error("exponent range of the zero matrix");
  return hi;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimension mismatch");
  LaurentMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const LaurentPoly& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const LaurentPoly& y = b(l, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum dimension mismatch");
  LaurentMatrix m(a);
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix difference dimension mismatch");
  LaurentMatrix m(a);
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
  return m;
}

std::string LaurentMatrix::to_string(const std::string& var) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",\n [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string(var);
    os << ']';
  }
  os << ']';
  return os.str();
}

LaurentPoly det_cofactor(const LaurentMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    LaurentPoly term = a(0, j) * det_cofactor(a.minor_matrix(0, j));
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

namespace {

LaurentPoly det_bareiss(LaurentMatrix m) {
  const std::size_t n = m.rows();
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return LaurentPoly();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss step produced an inexact division");
        m(i, j) = std::move(*q);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace

LaurentPoly det(const LaurentMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  if (a.rows() <= 4) return det_cofactor(a);
  return det_bareiss(a);
}

const char* to_string(GLClass c) {
  switch (c) {
    case GLClass::NotInvertible: return "not invertible";
    case GLClass::Laurent: return "GL over Q[t,t^-1]";
    case GLClass::Polynomial: return "GL over Q[t]";
    case GLClass::InversePolynomial: return "GL over Q[t^-1]";
    case GLClass::Constant: return "GL over Q[t] and Q[t^-1]";
  }
  return "?";
}

GLClass gl_class(const LaurentMatrix& a) {
  if (!a.is_square()) return GLClass::NotInvertible;
  auto unit = det(a).as_unit();
  if (!unit) return GLClass::NotInvertible;
  bool poly = true, inv = true;
  for (const auto& e : a.entries()) {
    poly = poly && e.in_polynomial_ring();
    inv = inv && e.in_inverse_ring();
  }
  // Units of Q[t] and Q[t^-1] are the nonzero constants.
  const bool constant_det = unit->second == 0;
  poly = poly && constant_det;
  inv = inv && constant_det;
  if (poly && inv) return GLClass::Constant;
  if (poly) return GLClass::Polynomial;
  if (inv) return GLClass::InversePolynomial;
  return GLClass::Laurent;
}

LaurentMatrix inverse(const LaurentMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  auto unit = det(a).as_unit();
  if (!unit) throw std::domain_error("matrix is not invertible over Q[t,t^-1]");
  const LaurentPoly inv_det = LaurentPoly::monomial(Rational(1) / unit->first, -unit->second);
  const std::size_t n = a.rows();
  if (n == 1) return LaurentMatrix(1, 1, {inv_det});
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly cof = det(a.minor_matrix(j, i));
      m(i, j) = ((i + j) % 2 ? -cof : cof) * inv_det;
    }
  return m;
}

}  // namespace jets
