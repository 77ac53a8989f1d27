#pragma once

/**
 * @file jet_transition.hpp
 * @brief Transition matrices of the jet bundles P^k(O(d)) on the projective line.
 *
 * Chart bases are ordered by ascending jet degree,
 *   left:  {1 (x) x0^d, dt (x) x0^d, ..., dt^k (x) x0^d}
 *   right: {1 (x) x0^d, du (x) x0^d, ..., du^k (x) x0^d}
 * and column p of the matrix expands the p-th basis vector of the other
 * chart (ds^p resp. dv^p, tensored with x1^d) in that basis. Both chart
 * variables t and u are stored as the single formal variable of LaurentPoly.
 */

#include "jets/laurent_matrix.hpp"

#include <cstdint>
#include <string>

namespace jets {

enum class Side { Left, Right };

const char* to_string(Side s);
/// Parses "left" / "right"; throws std::invalid_argument otherwise.
Side parse_side(const std::string& s);

/// Identifies a jet module: ambient dimension N, jet order k, twist d, module side.
struct JetSpec {
  int N = 1;
  int k = 0;
  int d = 0;
  Side side = Side::Left;

  JetSpec() = default;
  JetSpec(int N_, int k_, int d_, Side side_);

  friend bool operator==(const JetSpec&, const JetSpec&) = default;
  std::string to_string() const;
};

/// C(a, b) for 0 <= b <= a, zero otherwise. Throws std::overflow_error past int64.
std::int64_t binomial(std::int64_t a, std::int64_t b);

/// Matrix of P^k(O(d)) as left module; size (k+1) x (k+1), lower triangular.
LaurentMatrix build_left_matrix(int k, int d);

/// Matrix of P^k(O(d)) as right module; size (k+1) x (k+1), lower triangular.
LaurentMatrix build_right_matrix(int k, int d);

LaurentMatrix build_matrix(int k, int d, Side side);

/// Chart variable name used when printing: "t" on the left, "u" on the right.
inline const char* chart_variable(Side s) { return s == Side::Left ? "t" : "u"; }

/// True iff the matrix is GL over Q[t, t^-1] (the two-chart cocycle condition).
bool verify_cocycle(const LaurentMatrix& m);

/// The order-(k-1) matrix is the leading k x k block of the order-k matrix,
/// and the new corner is a monomial of exponent d - 2k.
bool truncation_check(int k, int d, Side side);

/// Exponent c of det = +-t^c predicted by the diagonal: (k+1)d - k(k+1).
int predicted_det_exponent(int k, int d);

}  // namespace jets
