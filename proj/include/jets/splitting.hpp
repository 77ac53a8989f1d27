#pragma once

/**
 * @file splitting.hpp
 * @brief Splitting types of bundles on P^1 given by a two-chart cocycle.
 *
 * A cocycle M (GL over Q[t, t^-1]) glues the trivial bundles on the two
 * standard charts; by Birkhoff-Grothendieck it is isomorphic to a sum of
 * line bundles O(a_i). Two independent routes recover {a_i}:
 *
 *  - splitting_from_h0: counts global sections of E(n) by exact linear
 *    algebra and reads the twists off the second differences of n -> h0(E(n));
 *  - birkhoff_factorize: row-reduces M over Q[t] until its row-leading
 *    coefficient matrix is invertible, producing M = U * D * V with
 *    U in GL(Q[t]), D = diag(t^a_i), V in GL(Q[t^-1]).
 */

#include "jets/errors.hpp"
#include "jets/jet_transition.hpp"
#include "jets/laurent_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jets {

/// Multiset of twists {a_i} meaning the sum of O(a_i); kept sorted descending.
class SplittingType {
public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> twists);

  const std::vector<int>& twists() const { return twists_; }
  std::size_t rank() const { return twists_.size(); }
  /// First Chern class: the sum of the twists.
  long c1() const;
  /// h0(E(n)) = sum_i max(a_i + n + 1, 0).
  long h0(int n) const;

  SplittingType shifted(int m) const;

  /// "O(1) ⊕ O(-2)^2", descending twist order.
  std::string to_string() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

private:
  std::vector<int> twists_;
};

struct BirkhoffWitness {
  LaurentMatrix U;  // GL over Q[t]
  LaurentMatrix D;  // diagonal, monomial entries t^a_i, a_i descending
  LaurentMatrix V;  // GL over Q[t^-1]

  /// Exponents of D's diagonal as a splitting type.
  SplittingType splitting() const;
};

/// B = r*E + |n| + 1 with r the size of M and E the largest absolute exponent.
int default_degree_bound(const LaurentMatrix& m, int n);

/// dim H^0(E(n)) where E has transition matrix m: the dimension of
/// {g in Q[t^-1]^r, deg <= B : t^n * m * g in Q[t]^r, deg <= B}.
/// Uses default_degree_bound when `bound` is empty. Throws std::invalid_argument
/// on a non-cocycle.
long h0_of_twisted_cocycle(const LaurentMatrix& m, int n, std::optional<int> bound = std::nullopt);

/// Twist window [lo, hi] that must contain every a_i: hi = max exponent of m,
/// lo = -(max exponent of m^-1) (by the same bound applied to the dual bundle).
std::pair<int, int> twist_bounds(const LaurentMatrix& m);

/// Authoritative splitting: second differences of the h0 profile.
/// Throws InternalInconsistency if the recovered twists do not add up.
SplittingType splitting_from_h0(const LaurentMatrix& m);

BirkhoffWitness birkhoff_factorize(const LaurentMatrix& m);

/// U*D*V == m exactly, U in GL(Q[t]), V in GL(Q[t^-1]), D diagonal monomial.
bool witness_is_valid(const BirkhoffWitness& w, const LaurentMatrix& m);

/// Closed-form splitting of P^k(O(d)) on P^1; UnsupportedCase unless N == 1.
SplittingType predicted_splitting(const JetSpec& spec);

/// The competing left statement for 0 <= d < k: O^(d+1) + O(d-k-1)^k.
/// Its rank is d+k+1, so it is kept only to be checked and reported.
SplittingType alternative_left_splitting(int k, int d);

}  // namespace jets
