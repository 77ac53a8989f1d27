#pragma once

// Closed-form cohomology dimensions of line bundles on P^N and of the twisted
// ideal sheaf m^(k+1) O(d) on P^1, plus rank and c1 of jet bundles.

#include <cstdint>
#include <string>
#include <vector>

namespace jets {

enum class SheafKind { LineBundle, TwistedIdeal };

/// LineBundle(d) is O(d); TwistedIdeal(k, d) is m^(k+1) O(d) on P^1.
struct SheafDescriptor {
  SheafKind kind = SheafKind::LineBundle;
  int k = 0;
  int d = 0;

  static SheafDescriptor line_bundle(int d) { return {SheafKind::LineBundle, 0, d}; }
  static SheafDescriptor twisted_ideal(int k, int d) { return {SheafKind::TwistedIdeal, k, d}; }

  /// "O(d)" or "I^{k+1}(d)".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument.
  static SheafDescriptor parse(const std::string& s);

  friend bool operator==(const SheafDescriptor&, const SheafDescriptor&) = default;
};

struct CohomologyTable {
  int N = 1;
  SheafDescriptor sheaf;
  std::vector<std::int64_t> dims;  // dims[i] = h^i, i = 0..N

  std::int64_t h(int i) const { return i >= 0 && i < static_cast<int>(dims.size()) ? dims[i] : 0; }
  std::int64_t euler_characteristic() const;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// chi(O(d)) on P^N as the polynomial (d+1)(d+2)...(d+N)/N!.
std::int64_t euler_characteristic_line_bundle(int N, int d);

CohomologyTable line_bundle_cohomology(int N, int d);

/// Same dimensions as O(d-k-1) on P^1.
CohomologyTable twisted_ideal_cohomology(int k, int d);

/// Dispatch on the descriptor; twisted ideals require N == 1.
CohomologyTable cohomology(int N, const SheafDescriptor& sheaf);

/// e * C(N+k, N).
std::int64_t jet_rank(int N, int k, int e);

/// c1 of P^k(O(d)) on P^N summed along the filtration by S^j(Omega) (x) O(d).
std::int64_t jet_c1(int N, int k, int d);

}  // namespace jets
