#include "jets/verify.hpp"

#include "jets/cohomology.hpp"
#include "jets/equivariant.hpp"
#include "jets/splitting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

namespace jets {

bool CellResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t VerifyReport::check_count() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.checks.size();
  return n;
}

std::size_t VerifyReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : cells)
    for (const auto& ch : c.checks) n += ch.pass ? 0 : 1;
  return n;
}

std::string VerifyReport::left_band_statement() const {
  std::ostringstream os;
  if (left_band.cells == 0) {
    os << "left splitting, 0 <= d < k band: no cells in grid";
    return os.str();
  }
  os << "left splitting, 0 <= d < k band (" << left_band.cells << " cells): computed type matches "
     << "O^(d+1) ⊕ O(-k-1)^(k-d) in " << left_band.match_rank_k_plus_1_form << " cells and "
     << "O^(d+1) ⊕ O(d-k-1)^k in " << left_band.match_rank_d_plus_k_plus_1_form << " cells; ";
  const bool first_holds = left_band.match_rank_k_plus_1_form == left_band.cells;
  const bool second_holds = left_band.match_rank_d_plus_k_plus_1_form == left_band.cells;
  if (first_holds && !second_holds)
    os << "the rank-(k+1) form O^(d+1) ⊕ O(-k-1)^(k-d) is confirmed; the rank-(d+k+1) form "
          "O^(d+1) ⊕ O(d-k-1)^k is rejected (the two forms coincide only at d = 0)";
  else if (first_holds)
    os << "both forms hold on every cell in the grid (only d = 0 cells present)";
  else
    os << "the rank-(k+1) form is NOT confirmed on every cell";
  return os.str();
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << "cells: " << cells.size() << ", checks: " << check_count() << ", failures: " << failure_count();
  return os.str();
}

namespace {

class CellChecker {
public:
  explicit CellChecker(CellResult& out) : out_(out) {}

  template <class F>
  void run(const std::string& name, F&& f) {
    CheckResult r{name, false, {}};
    try {
      std::string detail;
      r.pass = f(detail);
      if (!r.pass) r.detail = detail.empty() ? "check failed" : detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out_.checks.push_back(std::move(r));
  }

private:
  CellResult& out_;
};

void verify_p1_cell(const JetSpec& spec, CellChecker& check) {
  const int k = spec.k, d = spec.d;
  const LaurentMatrix m = build_matrix(k, d, spec.side);
  const int c1 = predicted_det_exponent(k, d);

  check.run("cocycle", [&](std::string&) { return verify_cocycle(m); });
  check.run("lower_triangular", [&](std::string&) { return m.is_lower_triangular(); });
  check.run("det_law", [&](std::string& why) {
    auto u = det(m).as_unit();
    if (!u) {
      why = "determinant is not a monomial";
      return false;
    }
    const bool ok = u->second == c1 && (u->first == Rational(1) || u->first == Rational(-1));
    if (!ok) why = "det = " + det(m).to_string() + ", expected ±t^" + std::to_string(c1);
    return ok;
  });
  check.run("truncation", [&](std::string&) { return truncation_check(k, d, spec.side); });
  check.run("splitting", [&](std::string& why) {
    const SplittingType by_h0 = splitting_from_h0(m);
    const BirkhoffWitness w = birkhoff_factorize(m);
    const SplittingType by_witness = w.splitting();
    const SplittingType predicted = predicted_splitting(spec);
    if (!witness_is_valid(w, m)) {
      why = "Birkhoff witness failed U*D*V == M or chart-ring checks";
      return false;
    }
    if (by_h0 != by_witness || by_h0 != predicted) {
      why = "h0: " + by_h0.to_string() + "; witness: " + by_witness.to_string() + "; predicted: " +
            predicted.to_string();
      return false;
    }
    return true;
  });
  check.run("c1", [&](std::string& why) {
    const long pred = predicted_splitting(spec).c1();
    const long jc = jet_c1(1, k, d);
    if (pred != c1 || jc != c1) {
      why = "det exponent " + std::to_string(c1) + ", predicted splitting " + std::to_string(pred) + ", jet_c1 " +
            std::to_string(jc);
      return false;
    }
    return true;
  });
  check.run("ideal_cohomology", [&](std::string& why) {
    const auto t = twisted_ideal_cohomology(k, d);
    const bool ok = t.h(0) == std::max(d - k, 0) && t.h(1) == std::max(k - d, 0);
    if (!ok) why = "h0 = " + std::to_string(t.h(0)) + ", h1 = " + std::to_string(t.h(1));
    return ok;
  });
  check.run("five_term_dimensions", [&](std::string& why) {
    const auto ideal = twisted_ideal_cohomology(k, d);
    const auto line = line_bundle_cohomology(1, d);
    const std::int64_t balance = ideal.h(0) - line.h(0) + jet_rank(1, k, 1) - ideal.h(1) + line.h(1);
    if (balance != 0) why = "alternating dimension sum is " + std::to_string(balance);
    return balance == 0;
  });
  check.run("vanishing", [&](std::string&) {
    return line_bundle_cohomology(1, k + 1).h(1) == 0 && line_bundle_cohomology(1, -k - 3).h(0) == 0;
  });
  check.run("fiber", [&](std::string& why) {
    const FiberReport r = verify_fiber(spec);
    if (!r.match())
      why = r.predicted.to_string() + " has weights " + r.predicted_weights.to_string() + ", oracle " +
            r.oracle_weights.to_string();
    return r.match();
  });
  check.run("five_term_sum", [&](std::string&) { return five_term_alternating_sum_vanishes(spec); });
  check.run("weight_sum", [&](std::string& why) {
    const auto labels = realize(predicted_fiber(spec), 1).sl2_labels();
    const long sum = std::accumulate(labels.begin(), labels.end(), 0L);
    const auto oracle = fiber_oracle(spec).sl2_labels();
    const long oracle_sum = std::accumulate(oracle.begin(), oracle.end(), 0L);
    if (sum != -c1 || oracle_sum != -c1) {
      why = "label sums " + std::to_string(sum) + " / " + std::to_string(oracle_sum) + ", expected " +
            std::to_string(-c1);
      return false;
    }
    return true;
  });
}

void verify_pn_cell(const JetSpec& spec, CellChecker& check) {
  check.run("fiber", [&](std::string& why) {
    const FiberReport r = verify_fiber(spec);
    if (!r.match())
      why = r.predicted.to_string() + ": dimension " + std::to_string(r.predicted_weights.dimension()) +
            " vs oracle " + std::to_string(r.oracle_weights.dimension()) + ", expected " +
            std::to_string(r.expected_dimension);
    return r.match();
  });
  check.run("c1", [&](std::string& why) {
    const std::int64_t c1 = jet_c1(spec.N, spec.k, spec.d);
    const std::int64_t expected = binomial(spec.N + spec.k, spec.N) * (spec.d - spec.k);
    if (c1 != expected) why = "jet_c1 = " + std::to_string(c1) + ", expected " + std::to_string(expected);
    return c1 == expected;
  });
}

}  // namespace

CellResult verify_cell(const JetSpec& spec) {
  CellResult out{spec, {}};
  CellChecker check(out);
  if (spec.N == 1) verify_p1_cell(spec, check);
  else verify_pn_cell(spec, check);
  return out;
}

std::vector<JetSpec> grid_cells(const VerifyOptions& opts) {
  std::vector<JetSpec> cells;
  for (int k = 1; k <= opts.kmax; ++k)
    for (int d = opts.dmin; d <= opts.dmax; ++d)
      for (Side s : {Side::Left, Side::Right}) cells.emplace_back(1, k, d, s);
  for (int N = 2; N <= opts.Nmax; ++N)
    for (int k = 1; k <= opts.kmax; ++k)
      for (int d = std::max(opts.dmin, k + 1); d <= opts.dmax; ++d) cells.emplace_back(N, k, d, Side::Left);
  return cells;
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("JETS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerifyReport run_verify(const VerifyOptions& opts) {
  if (opts.kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  if (opts.dmin > opts.dmax) throw std::invalid_argument("dmin must be <= dmax");
  if (opts.Nmax < 1) throw std::invalid_argument("Nmax must be >= 1");

  VerifyReport report{opts, {}, {}};
  const std::vector<JetSpec> cells = grid_cells(opts);
  report.cells.resize(cells.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) report.cells[i] = verify_cell(cells[i]);
  };
  const unsigned n = std::min<std::size_t>(resolve_thread_count(opts.threads), std::max<std::size_t>(cells.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& spec : cells) {
    if (spec.N != 1 || spec.side != Side::Left || !(0 <= spec.d && spec.d < spec.k)) continue;
    ++report.left_band.cells;
    try {
      const SplittingType computed = splitting_from_h0(build_left_matrix(spec.k, spec.d));
      if (computed == predicted_splitting(spec)) ++report.left_band.match_rank_k_plus_1_form;
      if (computed == alternative_left_splitting(spec.k, spec.d)) ++report.left_band.match_rank_d_plus_k_plus_1_form;
    } catch (const std::exception&) {
      // counted as matching neither form; the splitting check already records the error
    }
  }
  return report;
}

}  // namespace jets
