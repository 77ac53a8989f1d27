#include "jets/splitting.hpp"

#include "jets/rational_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace jets {

SplittingType::SplittingType(std::vector<int> twists) : twists_(std::move(twists)) {
  std::sort(twists_.begin(), twists_.end(), std::greater<>());
}

long SplittingType::c1() const { return std::accumulate(twists_.begin(), twists_.end(), 0L); }

long SplittingType::h0(int n) const {
  long h = 0;
  for (int a : twists_) h += std::max(a + n + 1, 0);
  return h;
}

SplittingType SplittingType::shifted(int m) const {
  std::vector<int> t = twists_;
  for (int& a : t) a += m;
  return SplittingType(std::move(t));
}

std::string SplittingType::to_string() const {
  if (twists_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < twists_.size();) {
    std::size_t j = i;
    while (j < twists_.size() && twists_[j] == twists_[i]) ++j;
    if (i) os << " ⊕ ";
    os << "O(" << twists_[i] << ')';
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

SplittingType BirkhoffWitness::splitting() const {
  std::vector<int> a;
  for (std::size_t i = 0; i < D.rows(); ++i) {
    auto u = D(i, i).as_unit();
    if (!u) throw InternalInconsistency("Birkhoff diagonal entry is not a monomial");
    a.push_back(u->second);
  }
  return SplittingType(std::move(a));
}

namespace {

void require_cocycle(const LaurentMatrix& m) {
  if (!verify_cocycle(m)) throw std::invalid_argument("matrix is not a cocycle (GL over Q[t,t^-1])");
}

int max_abs_exponent(const LaurentMatrix& m) {
  return std::max(std::abs(m.min_exp()), std::abs(m.max_exp()));
}

long h0_unchecked(const LaurentMatrix& m, int n, int bound) {
  const int r = static_cast<int>(m.rows());
  const int per = bound + 1;
  // Unknown g_{i,m'} is the coefficient of t^-m' in g_i; column index i*per + m'.
  // Constraint rows are keyed (j, s): the coefficient of t^s in (t^n M g)_j
  // must vanish whenever s < 0 or s > bound.
  std::map<std::pair<int, int>, std::map<int, Rational>> rows;
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      for (const auto& [e, c] : m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).terms())
        for (int mp = 0; mp <= bound; ++mp) {
          const int s = n + e - mp;
          if (s >= 0 && s <= bound) continue;
          rows[{j, s}][i * per + mp] += c;
        }
  SparseEchelon ech(r * per);
  for (auto& [key, row] : rows) {
    SparseRow sr;
    sr.reserve(row.size());
    for (auto& [col, v] : row)
      if (!v.is_zero()) sr.emplace_back(col, std::move(v));
    ech.add_row(std::move(sr));
  }
  return static_cast<long>(r) * per - ech.rank();
}

}  // namespace

int default_degree_bound(const LaurentMatrix& m, int n) {
  return static_cast<int>(m.rows()) * max_abs_exponent(m) + std::abs(n) + 1;
}

long h0_of_twisted_cocycle(const LaurentMatrix& m, int n, std::optional<int> bound) {
  require_cocycle(m);
  const int b = bound ? *bound : default_degree_bound(m, n);
  if (b < 0) throw std::invalid_argument("degree bound must be nonnegative");
  return h0_unchecked(m, n, b);
}

std::pair<int, int> twist_bounds(const LaurentMatrix& m) {
  require_cocycle(m);
  return {-inverse(m).max_exp(), m.max_exp()};
}

namespace {

// Any bound at least the true section degree gives the exact h0. Sections
// satisfy deg f <= n + max exp(M) (g has no positive powers) and
// deg_{1/t} g <= n - min exp(M^-1) (f has no negative powers).
int section_degree_bound(const LaurentMatrix& m, const LaurentMatrix& inv, int n) {
  return std::max({0, n + m.max_exp(), n - inv.min_exp()});
}

}  // namespace

SplittingType splitting_from_h0(const LaurentMatrix& m) {
  require_cocycle(m);
  const int r = static_cast<int>(m.rows());
  const LaurentMatrix inv = inverse(m);
  const int hi = m.max_exp();
  const int lo = -inv.max_exp();
  const int c = det(m).as_unit()->second;

  // h(n) = 0 for n < -hi; profile over [-hi-1, -lo+1].
  const int n_begin = -hi - 1;
  const int n_end = -lo + 1;
  std::vector<long> h;
  for (int n = n_begin; n <= n_end; ++n) h.push_back(h0_unchecked(m, n, section_degree_bound(m, inv, n)));
  auto h_at = [&](int n) -> long { return n < n_begin ? 0 : h[static_cast<std::size_t>(n - n_begin)]; };
  auto delta = [&](int n) { return h_at(n) - h_at(n - 1); };

  std::vector<int> twists;
  for (int n = -hi; n <= n_end; ++n) {
    const long count = delta(n) - delta(n - 1);
    if (count < 0) throw InternalInconsistency("negative twist multiplicity in h0 profile");
    for (long i = 0; i < count; ++i) twists.push_back(-n);
  }
  SplittingType st(std::move(twists));
  if (static_cast<int>(st.rank()) != r)
    throw InternalInconsistency("h0 profile recovered " + std::to_string(st.rank()) + " twists for rank " +
                                std::to_string(r));
  if (st.c1() != c)
    throw InternalInconsistency("h0 profile twists sum to " + std::to_string(st.c1()) +
                                " but det exponent is " + std::to_string(c));
  return st;
}

BirkhoffWitness birkhoff_factorize(const LaurentMatrix& m) {
  require_cocycle(m);
  const std::size_t r = m.rows();
  LaurentMatrix w = m;
  LaurentMatrix u = LaurentMatrix::identity(r);
  std::vector<int> deg(r);

  // Invariant: m == u * w with u in GL(Q[t]). Each round lowers the degree of
  // one row, and the row degrees sum to at least the det exponent, so this ends.
  for (int round = 0;; ++round) {
    DenseMatrix lead(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
      int d = 0;
      bool any = false;
      for (std::size_t j = 0; j < r; ++j) {
        if (w(i, j).is_zero()) continue;
        d = any ? std::max(d, w(i, j).max_exp()) : w(i, j).max_exp();
        any = true;
      }
      if (!any) throw InternalInconsistency("zero row during Birkhoff reduction");
      deg[i] = d;
      for (std::size_t j = 0; j < r; ++j) lead[i][j] = w(i, j).coeff(d);
    }
    auto c = left_null_vector(lead);
    if (!c) break;
    if (round > 100000) throw InternalInconsistency("Birkhoff reduction did not terminate");

    std::size_t l = r;
    for (std::size_t i = 0; i < r; ++i)
      if (!(*c)[i].is_zero() && (l == r || deg[i] > deg[l])) l = i;

    for (std::size_t i = 0; i < r; ++i) {
      if (i == l || (*c)[i].is_zero()) continue;
      const LaurentPoly f = LaurentPoly::monomial((*c)[i] / (*c)[l], deg[l] - deg[i]);
      for (std::size_t j = 0; j < r; ++j) {
        if (!w(i, j).is_zero()) w(l, j) += f * w(i, j);
        if (!u(j, l).is_zero()) u(j, i) -= f * u(j, l);
      }
    }
  }

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

  LaurentMatrix uu(r, r), dd(r, r), vv(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t src = order[i];
    dd(i, i) = LaurentPoly::monomial(Rational(1), deg[src]);
    for (std::size_t j = 0; j < r; ++j) {
      uu(j, i) = u(j, src);
      vv(i, j) = w(src, j).shifted(-deg[src]);
    }
  }
  return BirkhoffWitness{std::move(uu), std::move(dd), std::move(vv)};
}

bool witness_is_valid(const BirkhoffWitness& w, const LaurentMatrix& m) {
  if (!w.D.is_square() || w.D.rows() != m.rows() || !w.D.is_diagonal()) return false;
  for (std::size_t i = 0; i < w.D.rows(); ++i)
    if (!w.D(i, i).as_unit()) return false;
  if (!is_gl_polynomial(gl_class(w.U))) return false;
  if (!is_gl_inverse(gl_class(w.V))) return false;
  return w.U * w.D * w.V == m;
}

SplittingType predicted_splitting(const JetSpec& spec) {
  if (spec.N != 1) throw UnsupportedCase("predicted splitting is only defined on P^1 (N = 1), got " + spec.to_string());
  const int k = spec.k, d = spec.d;
  std::vector<int> a;
  if (spec.side == Side::Left) {
    if (d < 0 || d >= k) {
      a.assign(static_cast<std::size_t>(k + 1), d - k);
    } else {
      a.assign(static_cast<std::size_t>(d + 1), 0);
      a.insert(a.end(), static_cast<std::size_t>(k - d), -k - 1);
    }
  } else {
    a.push_back(d);
    a.insert(a.end(), static_cast<std::size_t>(k), d - k - 1);
  }
  return SplittingType(std::move(a));
}

SplittingType alternative_left_splitting(int k, int d) {
  if (!(0 <= d && d < k)) throw UnsupportedCase("alternative left splitting only concerns 0 <= d < k");
  std::vector<int> a(static_cast<std::size_t>(d + 1), 0);
  a.insert(a.end(), static_cast<std::size_t>(k), d - k - 1);
  return SplittingType(std::move(a));
}

}  // namespace jets
