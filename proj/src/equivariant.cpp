#include "jets/equivariant.hpp"

#include "jets/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace jets {

// ---------------------------------------------------------------- Weight

Weight::Weight(std::vector<int> components) : c_(std::move(components)) {
  if (c_.empty()) throw std::invalid_argument("weight needs at least one component");
  const int shift = c_[0];
  for (int& x : c_) x -= shift;
}

Weight Weight::basis(int N, int i) {
  std::vector<int> c(static_cast<std::size_t>(N + 1), 0);
  c.at(static_cast<std::size_t>(i)) = 1;
  return Weight(std::move(c));
}

int Weight::sl2_label() const {
  if (c_.size() != 2) throw std::invalid_argument("SL2 labels need N = 1");
  return c_[0] - c_[1];
}

Weight Weight::operator-() const {
  std::vector<int> c = c_;
  for (int& x : c) x = -x;
  return Weight(std::move(c));
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.c_.size() != b.c_.size()) throw std::invalid_argument("adding weights of different ranks");
  std::vector<int> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return Weight(std::move(c));
}

Weight operator*(int s, const Weight& w) {
  std::vector<int> c = w.c_;
  for (int& x : c) x *= s;
  return Weight(std::move(c));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------- WeightModule

WeightModule::WeightModule(int N, std::vector<Weight> weights) : N_(N), weights_(std::move(weights)) {
  for (const auto& w : weights_)
    if (w.N() != N_) throw std::invalid_argument("weight rank does not match module rank");
  std::sort(weights_.begin(), weights_.end());
}

WeightModule WeightModule::dual() const {
  std::vector<Weight> w;
  w.reserve(weights_.size());
  for (const auto& x : weights_) w.push_back(-x);
  return WeightModule(N_, std::move(w));
}

WeightModule WeightModule::tensor(const WeightModule& o) const {
  if (o.N_ != N_) throw std::invalid_argument("tensor of modules on different spaces");
  std::vector<Weight> w;
  w.reserve(weights_.size() * o.weights_.size());
  for (const auto& a : weights_)
    for (const auto& b : o.weights_) w.push_back(a + b);
  return WeightModule(N_, std::move(w));
}

WeightModule WeightModule::direct_sum(const WeightModule& o) const {
  if (o.N_ != N_) throw std::invalid_argument("direct sum of modules on different spaces");
  std::vector<Weight> w = weights_;
  w.insert(w.end(), o.weights_.begin(), o.weights_.end());
  return WeightModule(N_, std::move(w));
}

std::vector<int> WeightModule::sl2_labels() const {
  std::vector<int> out;
  out.reserve(weights_.size());
  for (const auto& w : weights_) out.push_back(w.sl2_label());
  std::sort(out.begin(), out.end());
  return out;
}

Weight WeightModule::weight_sum() const {
  Weight acc = Weight::zero(N_);
  for (const auto& w : weights_) acc = acc + w;
  return acc;
}

std::string WeightModule::to_string() const {
  std::ostringstream os;
  os << '{';
  if (N_ == 1) {
    const auto labels = sl2_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << labels[i];
  } else {
    for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? ", " : "") << weights_[i].to_string();
  }
  os << '}';
  return os.str();
}

// ------------------------------------------------------ VirtualCharacter

void VirtualCharacter::add(const WeightModule& m, int sign) {
  if (m.N() != N_) throw std::invalid_argument("virtual character rank mismatch");
  for (const auto& w : m.weights()) {
    auto it = mult_.try_emplace(w, 0).first;
    it->second += sign;
    if (it->second == 0) mult_.erase(it);
  }
}

bool VirtualCharacter::is_effective() const {
  return std::all_of(mult_.begin(), mult_.end(), [](const auto& kv) { return kv.second > 0; });
}

WeightModule VirtualCharacter::to_module() const {
  std::vector<Weight> w;
  for (const auto& [weight, m] : mult_) {
    if (m < 0) throw InternalInconsistency("virtual character has negative multiplicity at " + weight.to_string());
    w.insert(w.end(), static_cast<std::size_t>(m), weight);
  }
  return WeightModule(N_, std::move(w));
}

// ------------------------------------------------------------ ModuleExpr

ModuleExpr ModuleExpr::sym_l(int a, bool dual) {
  if (a < 0) return ModuleExpr{Kind::SymL, -a, !dual, {}};
  return ModuleExpr{Kind::SymL, a, dual, {}};
}

ModuleExpr ModuleExpr::sym_v(int b, bool dual) { return ModuleExpr{Kind::SymV, b, dual, {}}; }

ModuleExpr ModuleExpr::tensor(std::vector<ModuleExpr> parts) {
  return ModuleExpr{Kind::Tensor, 0, false, std::move(parts)};
}

ModuleExpr ModuleExpr::direct_sum(std::vector<ModuleExpr> parts) {
  return ModuleExpr{Kind::DirectSum, 0, false, std::move(parts)};
}

ModuleExpr ModuleExpr::dualized() const {
  ModuleExpr e = *this;
  if (kind == Kind::SymL || kind == Kind::SymV) {
    e.dual = !dual;
  } else {
    for (auto& c : e.children) c = c.dualized();
  }
  return e;
}

std::string ModuleExpr::to_string() const {
  switch (kind) {
    case Kind::SymL:
      return "Sym^" + std::to_string(power) + (dual ? "(L*)" : "(L)");
    case Kind::SymV:
      return "Sym^" + std::to_string(power) + (dual ? "(V*)" : "(V)");
    case Kind::Tensor:
    case Kind::DirectSum: {
      if (children.empty()) return kind == Kind::Tensor ? "1" : "0";
      std::string out;
      const char* sep = kind == Kind::Tensor ? " ⊗ " : " ⊕ ";
      for (std::size_t i = 0; i < children.size(); ++i) {
        std::string s = children[i].to_string();
        // Sums nested inside tensors need brackets; tensors bind tighter than sums.
        if (kind == Kind::Tensor && children[i].kind == Kind::DirectSum && children[i].children.size() > 1)
          s = "(" + s + ")";
        out += (i ? sep : "") + s;
      }
      return out;
    }
  }
  return "?";
}

WeightModule sym_v_weights(int N, int b) {
  if (b < 0) throw std::invalid_argument("Sym^" + std::to_string(b) + "(V) has a negative exponent");
  std::vector<Weight> out;
  std::vector<int> counts(static_cast<std::size_t>(N + 1), 0);
  // Enumerate exponent vectors (c_0..c_N) with sum b.
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == N) {
      counts[static_cast<std::size_t>(idx)] = left;
      out.emplace_back(counts);
      return;
    }
    for (int c = left; c >= 0; --c) {
      counts[static_cast<std::size_t>(idx)] = c;
      rec(idx + 1, left - c);
    }
  };
  rec(0, b);
  return WeightModule(N, std::move(out));
}

WeightModule realize(const ModuleExpr& expr, int N) {
  if (N < 1) throw std::invalid_argument("realize needs N >= 1");
  switch (expr.kind) {
    case ModuleExpr::Kind::SymL: {
      if (expr.power < 0) throw std::invalid_argument("unnormalized negative Sym power of L");
      Weight w = expr.power * Weight::basis(N, 0);
      WeightModule m(N, {w});
      return expr.dual ? m.dual() : m;
    }
    case ModuleExpr::Kind::SymV: {
      WeightModule m = sym_v_weights(N, expr.power);
      return expr.dual ? m.dual() : m;
    }
    case ModuleExpr::Kind::Tensor: {
      WeightModule acc = WeightModule::trivial(N);
      for (const auto& c : expr.children) acc = acc.tensor(realize(c, N));
      return acc;
    }
    case ModuleExpr::Kind::DirectSum: {
      WeightModule acc(N);
      for (const auto& c : expr.children) acc = acc.direct_sum(realize(c, N));
      return acc;
    }
  }
  throw std::logic_error("unknown module expression kind");
}

// ------------------------------------------------------ jet fibers

ModuleExpr predicted_fiber(const JetSpec& spec) {
  using E = ModuleExpr;
  const int k = spec.k, d = spec.d;
  if (spec.N == 1 && k >= 1) {
    if (spec.side == Side::Left) {
      if (k <= d) return E::tensor({E::sym_l(d - k, true), E::sym_v(k, true)});
      if (d < 0) return E::tensor({E::sym_l(k - d), E::sym_v(k)});
      return E::direct_sum({E::sym_v(d, true), E::tensor({E::sym_l(k + 1), E::sym_v(k - d - 1)})});
    }
    if (d < 0) return E::direct_sum({E::sym_l(-d), E::tensor({E::sym_l(k - d + 1), E::sym_v(k - 1)})});
    return E::direct_sum({E::sym_l(d, true), E::tensor({E::sym_l(d - k - 1, true), E::sym_v(k - 1)})});
  }
  if (spec.N > 1 && spec.side == Side::Left && 1 <= k && k < d)
    return E::tensor({E::sym_l(d - k, true), E::sym_v(k, true)});
  throw UnsupportedCase("no fiber classification for " + spec.to_string() +
                        ": covered cases are N = 1 with k >= 1, and N > 1 left with 1 <= k < d");
}

WeightModule h0_weights(int d) {
  if (d < 0) return WeightModule(1);
  return sym_v_weights(1, d).dual();
}

WeightModule h1_weights(int d) {
  if (d > -2) return WeightModule(1);
  return sym_v_weights(1, -d - 2);
}

FiveTermWeights five_term_weights(int k, int d) {
  // m^(k+1) O(d) is O(d-k-1) twisted by the character Sym^(k+1)(L).
  const WeightModule twist = realize(ModuleExpr::sym_l(k + 1), 1);
  FiveTermWeights f;
  f.h0_ideal = twist.tensor(h0_weights(d - k - 1));
  f.h0_line = h0_weights(d);
  f.h1_ideal = twist.tensor(h1_weights(d - k - 1));
  f.h1_line = h1_weights(d);
  // Dimension sanity against the closed-form cohomology.
  const auto ideal = twisted_ideal_cohomology(k, d);
  const auto line = line_bundle_cohomology(1, d);
  if (static_cast<std::int64_t>(f.h0_ideal.dimension()) != ideal.h(0) ||
      static_cast<std::int64_t>(f.h1_ideal.dimension()) != ideal.h(1) ||
      static_cast<std::int64_t>(f.h0_line.dimension()) != line.h(0) ||
      static_cast<std::int64_t>(f.h1_line.dimension()) != line.h(1))
    throw InternalInconsistency("cohomology weights disagree with cohomology dimensions");
  return f;
}

WeightModule local_frame_fiber(int N, int k, int d) {
  // Sym^j(Omega_e): multisets of size j from {e_0 - e_i : i = 1..N}.
  std::vector<Weight> out;
  const Weight base = (-d) * Weight::basis(N, 0);
  for (int j = 0; j <= k; ++j) {
    std::vector<int> counts(static_cast<std::size_t>(N + 1), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == N) {
        counts[static_cast<std::size_t>(idx)] = left;
        std::vector<int> c(static_cast<std::size_t>(N + 1), 0);
        c[0] = j;
        for (int i = 1; i <= N; ++i) c[static_cast<std::size_t>(i)] = -counts[static_cast<std::size_t>(i)];
        out.push_back(base + Weight(std::move(c)));
        return;
      }
      for (int c = left; c >= 0; --c) {
        counts[static_cast<std::size_t>(idx)] = c;
        rec(idx + 1, left - c);
      }
    };
    rec(1, j);
  }
  return WeightModule(N, std::move(out));
}

namespace {

WeightModule five_term_fiber(int k, int d) {
  const FiveTermWeights f = five_term_weights(k, d);
  VirtualCharacter v(1);
  v.add(f.h0_line, +1);
  v.add(f.h0_ideal, -1);
  v.add(f.h1_ideal, +1);
  v.add(f.h1_line, -1);
  if (!v.is_effective())
    throw InternalInconsistency("five-term sequence does not yield an honest module for k=" + std::to_string(k) +
                                ", d=" + std::to_string(d));
  return v.to_module();
}

}  // namespace

WeightModule fiber_oracle(const JetSpec& spec) {
  if (spec.N == 1 && spec.k >= 1) {
    if (spec.side == Side::Left) return five_term_fiber(spec.k, spec.d);
    // Right structure: 0 -> H0(O) (x) O(d)(e) -> fiber -> H1(m^(k+1)) (x) O(d)(e) -> 0.
    const WeightModule line_fiber = realize(ModuleExpr::sym_l(spec.d, true), 1);
    return line_fiber.tensor(five_term_fiber(spec.k, 0));
  }
  if (spec.N > 1 && spec.side == Side::Left && 1 <= spec.k && spec.k < spec.d)
    return local_frame_fiber(spec.N, spec.k, spec.d);
  throw UnsupportedCase("no fiber oracle for " + spec.to_string());
}

FiberReport verify_fiber(const JetSpec& spec) {
  FiberReport r{spec, predicted_fiber(spec)};
  r.predicted_weights = realize(r.predicted, spec.N);
  r.oracle_weights = fiber_oracle(spec);
  r.expected_dimension = jet_rank(spec.N, spec.k, 1);
  r.weights_match = r.predicted_weights == r.oracle_weights;
  r.dimension_match = static_cast<std::int64_t>(r.predicted_weights.dimension()) == r.expected_dimension &&
                      static_cast<std::int64_t>(r.oracle_weights.dimension()) == r.expected_dimension;
  return r;
}

bool five_term_alternating_sum_vanishes(const JetSpec& spec) {
  if (spec.N != 1) throw UnsupportedCase("five-term sequence is only available on P^1");
  const WeightModule fiber = realize(predicted_fiber(spec), 1);
  VirtualCharacter v(1);
  if (spec.side == Side::Left) {
    const FiveTermWeights f = five_term_weights(spec.k, spec.d);
    v.add(f.h0_ideal, +1);
    v.add(f.h0_line, -1);
    v.add(fiber, +1);
    v.add(f.h1_ideal, -1);
    v.add(f.h1_line, +1);
  } else {
    const WeightModule line_fiber = realize(ModuleExpr::sym_l(spec.d, true), 1);
    const FiveTermWeights f = five_term_weights(spec.k, 0);
    v.add(line_fiber.tensor(f.h0_ideal), +1);
    v.add(line_fiber.tensor(f.h0_line), -1);
    v.add(fiber, +1);
    v.add(line_fiber.tensor(f.h1_ideal), -1);
    v.add(line_fiber.tensor(f.h1_line), +1);
  }
  return v.is_zero();
}

}  // namespace jets
