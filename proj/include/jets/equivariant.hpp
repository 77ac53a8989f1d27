#pragma once

/**
 * @file equivariant.hpp
 * @brief Torus-weight calculus for P-modules on P^N = SL(V)/P.
 *
 * Only the restriction to the diagonal torus T of SL(V) is modeled: a module
 * is its multiset of weights. Normalization:
 *   - V has weights e_0..e_N, L = span(e_0) has weight e_0;
 *   - x_i in V* has weight -e_i, so the fiber of O(d) at the base point is
 *     Sym^d(L*), weight -d*e_0;
 *   - the cotangent fiber Omega_e has weights e_0 - e_i, i = 1..N.
 * Weights are compared modulo the all-ones vector (SL characters), stored
 * with component 0 equal to zero.
 */

#include "jets/errors.hpp"
#include "jets/jet_transition.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace jets {

class Weight {
public:
  Weight() = default;
  /// Canonicalizes by subtracting components[0] from every component.
  explicit Weight(std::vector<int> components);

  static Weight zero(int N) { return Weight(std::vector<int>(static_cast<std::size_t>(N + 1), 0)); }
  /// The basis character e_i in dimension N.
  static Weight basis(int N, int i);

  const std::vector<int>& components() const { return c_; }
  int N() const { return static_cast<int>(c_.size()) - 1; }

  /// SL2 label a_0 - a_1 (N = 1 only), e.g. e_0 - e_1 -> +2.
  int sl2_label() const;

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator*(int s, const Weight& w);
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string to_string() const;

private:
  std::vector<int> c_;
};

class WeightModule {
public:
  explicit WeightModule(int N = 1) : N_(N) {}
  WeightModule(int N, std::vector<Weight> weights);

  /// The one-dimensional trivial module.
  static WeightModule trivial(int N) { return WeightModule(N, {Weight::zero(N)}); }

  int N() const { return N_; }
  std::size_t dimension() const { return weights_.size(); }
  /// Sorted ascending.
  const std::vector<Weight>& weights() const { return weights_; }

  WeightModule dual() const;
  WeightModule tensor(const WeightModule& o) const;
  WeightModule direct_sum(const WeightModule& o) const;

  /// Sorted SL2 labels (N = 1 only).
  std::vector<int> sl2_labels() const;
  /// Componentwise sum of all weights (canonical).
  Weight weight_sum() const;

  friend bool operator==(const WeightModule&, const WeightModule&) = default;

  std::string to_string() const;

private:
  int N_;
  std::vector<Weight> weights_;
};

/// Formal Z-linear combination of weights; used for alternating sums along
/// exact sequences.
class VirtualCharacter {
public:
  explicit VirtualCharacter(int N) : N_(N) {}
  void add(const WeightModule& m, int sign = 1);
  bool is_zero() const { return mult_.empty(); }
  bool is_effective() const;
  /// The module with these multiplicities; throws InternalInconsistency if any is negative.
  WeightModule to_module() const;

private:
  int N_;
  std::map<Weight, long> mult_;
};

/// Symbolic module expression: Sym^a(L) or its dual, Sym^b(V) or its dual,
/// tensor products and direct sums.
struct ModuleExpr {
  enum class Kind { SymL, SymV, Tensor, DirectSum };

  Kind kind = Kind::Tensor;
  int power = 0;
  bool dual = false;
  std::vector<ModuleExpr> children;

  /// Sym^a(L) (or L*); a negative a is rewritten as the opposite dual with -a.
  static ModuleExpr sym_l(int a, bool dual = false);
  static ModuleExpr sym_v(int b, bool dual = false);
  static ModuleExpr tensor(std::vector<ModuleExpr> parts);
  static ModuleExpr direct_sum(std::vector<ModuleExpr> parts);

  ModuleExpr dualized() const;

  /// e.g. "Sym^0(V*) ⊕ Sym^3(L) ⊗ Sym^1(V)".
  std::string to_string() const;

  friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;
};

/// Torus weights of the expression in dimension N. A negative Sym power of V
/// is an error (std::invalid_argument).
WeightModule realize(const ModuleExpr& expr, int N);

/// Weights of Sym^b(V) (b >= 0) on P^N.
WeightModule sym_v_weights(int N, int b);

/// The closed-form P-module of the jet fiber at the base point.
/// Covered: N = 1 with k >= 1 (both sides); N > 1 left with 1 <= k < d.
ModuleExpr predicted_fiber(const JetSpec& spec);

/// Weights of H^0(P^1, O(d)) and H^1(P^1, O(d)).
WeightModule h0_weights(int d);
WeightModule h1_weights(int d);

/// Terms of the five-term sequence
///   0 -> H0(m^(k+1) O(d)) -> H0(O(d)) -> fiber -> H1(m^(k+1) O(d)) -> H1(O(d)) -> 0
struct FiveTermWeights {
  WeightModule h0_ideal{1}, h0_line{1}, h1_ideal{1}, h1_line{1};
};
FiveTermWeights five_term_weights(int k, int d);

/// Fiber weights assembled from the local frame:
/// sum_{j=0..k} Sym^j(Omega_e) (x) Sym^d(L*).
WeightModule local_frame_fiber(int N, int k, int d);

/// Independent fiber weights: N = 1 from the five-term sequences (left: the
/// sequence above; right: fiber of O(d) tensored with the d = 0 sequence),
/// N > 1 left from the local frame.
WeightModule fiber_oracle(const JetSpec& spec);

struct FiberReport {
  JetSpec spec;
  ModuleExpr predicted;
  WeightModule predicted_weights{1};
  WeightModule oracle_weights{1};
  std::int64_t expected_dimension = 0;
  bool weights_match = false;
  bool dimension_match = false;

  bool match() const { return weights_match && dimension_match; }
};

FiberReport verify_fiber(const JetSpec& spec);

/// Alternating sum along the five-term sequence with the predicted fiber in
/// the middle slot (left), or along the right-side sequence; zero iff the
/// predicted fiber is compatible with exactness.
bool five_term_alternating_sum_vanishes(const JetSpec& spec);

}  // namespace jets
