#pragma once

// Grid verification: runs every structural and classification check over a
// (N, k, d, side) grid and collects a report.

#include "jets/jet_transition.hpp"

#include <string>
#include <vector>

namespace jets {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct CellResult {
  JetSpec spec;
  std::vector<CheckResult> checks;

  bool pass() const;
  friend bool operator==(const CellResult&, const CellResult&) = default;
};

/// Tally for the 0 <= d < k band of left cells: which of the two competing
/// closed forms the computed splitting agrees with.
struct LeftBandTally {
  int cells = 0;
  int match_rank_k_plus_1_form = 0;  // O^(d+1) + O(-k-1)^(k-d)
  int match_rank_d_plus_k_plus_1_form = 0;  // O^(d+1) + O(d-k-1)^k

  friend bool operator==(const LeftBandTally&, const LeftBandTally&) = default;
};

struct VerifyOptions {
  int kmax = 6;
  int dmin = -6;
  int dmax = 6;
  int Nmax = 3;
  unsigned threads = 0;  // 0: JETS_THREADS or hardware concurrency
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CellResult> cells;
  LeftBandTally left_band;

  std::size_t check_count() const;
  std::size_t failure_count() const;
  bool all_pass() const { return failure_count() == 0; }
  /// Human-readable statement about the 0 <= d < k left band.
  std::string left_band_statement() const;
  std::string summary() const;

  friend bool operator==(const VerifyReport& a, const VerifyReport& b) {
    return a.cells == b.cells && a.left_band == b.left_band && a.options.kmax == b.options.kmax &&
           a.options.dmin == b.options.dmin && a.options.dmax == b.options.dmax && a.options.Nmax == b.options.Nmax;
  }
};

/// Every check for one cell. N = 1 cells get the full matrix/splitting/
/// cohomology/fiber battery; N > 1 cells (left, 1 <= k < d) the fiber and c1 checks.
CellResult verify_cell(const JetSpec& spec);

/// Grid cells in a fixed order: N = 1 (k, d, side), then N = 2..Nmax left cells with k < d.
std::vector<JetSpec> grid_cells(const VerifyOptions& opts);

/// Throws std::invalid_argument unless kmax >= 1, dmin <= dmax, Nmax >= 1.
VerifyReport run_verify(const VerifyOptions& opts);

/// Worker count: explicit value, else JETS_THREADS, else hardware concurrency (>= 1).
unsigned resolve_thread_count(unsigned requested);

}  // namespace jets
