#pragma once

/**
 * @file laurent_matrix.hpp
 * @brief Dense matrices over Q[t, t^-1] and chart-aware invertibility.
 *
 * Convention for transition matrices: column p holds the coordinates of the
 * p-th basis vector of the second chart expressed in the basis of the first
 * chart. Everything downstream assumes this.
 */

#include "jets/laurent_poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jets {

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class LaurentMatrix {
public:
  LaurentMatrix(std::size_t rows, std::size_t cols);
  LaurentMatrix(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries);
  LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows);

  static LaurentMatrix identity(std::size_t n);
  static LaurentMatrix diagonal(const std::vector<LaurentPoly>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<LaurentPoly>& entries() const { return entries_; }

  LaurentMatrix transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  LaurentMatrix submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  /// Delete row i and column j.
  LaurentMatrix minor_matrix(std::size_t i, std::size_t j) const;

  /// Multiply every entry by a scalar Laurent polynomial.
  LaurentMatrix scaled(const LaurentPoly& s) const;

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_lower_triangular() const;

  /// Exponent range over all nonzero entries; throws on the zero matrix.
  int min_exp() const;
  int max_exp() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  std::string to_string(const std::string& var = "t") const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<LaurentPoly> entries_;
};

/// Exact determinant: cofactor expansion up to 4x4, Bareiss elimination above.
LaurentPoly det(const LaurentMatrix& a);

/// Cofactor expansion at any size; exposed as an independent check of det().
LaurentPoly det_cofactor(const LaurentMatrix& a);

enum class GLClass {
  NotInvertible,
  Laurent,         // GL over Q[t, t^-1] only
  Polynomial,      // GL over Q[t] (hence also over Q[t, t^-1])
  InversePolynomial,  // GL over Q[t^-1]
  Constant,        // GL over both Q[t] and Q[t^-1]
};

const char* to_string(GLClass c);

GLClass gl_class(const LaurentMatrix& a);

inline bool is_gl_laurent(GLClass c) { return c != GLClass::NotInvertible; }
inline bool is_gl_polynomial(GLClass c) { return c == GLClass::Polynomial || c == GLClass::Constant; }
inline bool is_gl_inverse(GLClass c) { return c == GLClass::InversePolynomial || c == GLClass::Constant; }

/// Inverse of a matrix that is GL over Q[t, t^-1] (adjugate over the unit
/// determinant); throws std::domain_error otherwise.
LaurentMatrix inverse(const LaurentMatrix& a);

}  // namespace jets
