#include "jets/cohomology.hpp"

#include "jets/jet_transition.hpp"

#include <regex>
#include <stdexcept>

namespace jets {

std::string SheafDescriptor::to_string() const {
  if (kind == SheafKind::LineBundle) return "O(" + std::to_string(d) + ")";
  return "I^{" + std::to_string(k + 1) + "}(" + std::to_string(d) + ")";
}

SheafDescriptor SheafDescriptor::parse(const std::string& s) {
  static const std::regex line(R"(^\s*O\(\s*(-?\d+)\s*\)\s*$)");
  static const std::regex ideal(R"(^\s*I\^\{?\s*(\d+)\s*\}?\(\s*(-?\d+)\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, line)) return line_bundle(std::stoi(m[1]));
  if (std::regex_match(s, m, ideal)) {
    const int power = std::stoi(m[1]);
    if (power < 1) throw std::invalid_argument("ideal power must be >= 1 in '" + s + "'");
    return twisted_ideal(power - 1, std::stoi(m[2]));
  }
  throw std::invalid_argument("unrecognized sheaf '" + s + "'; expected O(d) or I^{k+1}(d)");
}

std::int64_t CohomologyTable::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) chi += (i % 2 ? -1 : 1) * dims[i];
  return chi;
}

std::int64_t euler_characteristic_line_bundle(int N, int d) {
  // Product of N consecutive integers is divisible by N!, and each prefix
  // product of j consecutive integers by j!, so the running quotient is exact.
  std::int64_t acc = 1;
  for (int j = 1; j <= N; ++j) acc = acc * (d + j) / j;
  return acc;
}

CohomologyTable line_bundle_cohomology(int N, int d) {
  if (N < 1) throw std::invalid_argument("projective dimension N must be >= 1");
  CohomologyTable t{N, SheafDescriptor::line_bundle(d), std::vector<std::int64_t>(N + 1, 0)};
  if (d >= 0) t.dims[0] = binomial(N + d, N);
  // Serre duality: h^N(O(d)) = h^0(O(-d-N-1)).
  if (d <= -N - 1) t.dims[static_cast<std::size_t>(N)] = binomial(-d - 1, N);
  return t;
}

CohomologyTable twisted_ideal_cohomology(int k, int d) {
  if (k < 0) throw std::invalid_argument("jet order k must be >= 0");
  CohomologyTable t = line_bundle_cohomology(1, d - k - 1);
  t.sheaf = SheafDescriptor::twisted_ideal(k, d);
  return t;
}

CohomologyTable cohomology(int N, const SheafDescriptor& sheaf) {
  if (sheaf.kind == SheafKind::LineBundle) return line_bundle_cohomology(N, sheaf.d);
  if (N != 1) throw std::invalid_argument("twisted ideal cohomology is only available on P^1");
  return twisted_ideal_cohomology(sheaf.k, sheaf.d);
}

std::int64_t jet_rank(int N, int k, int e) {
  if (N < 1 || k < 0 || e < 1) throw std::invalid_argument("jet_rank needs N >= 1, k >= 0, e >= 1");
  return e * binomial(N + k, N);
}

std::int64_t jet_c1(int N, int k, int d) {
  if (N < 1 || k < 0) throw std::invalid_argument("jet_c1 needs N >= 1, k >= 0");
  std::int64_t c1 = 0;
  for (int j = 0; j <= k; ++j) {
    // rank S^j(Omega) and c1(S^j(Omega)) = C(N+j-1, N) * c1(Omega), c1(Omega) = -(N+1).
    const std::int64_t rank_j = binomial(N + j - 1, N - 1);
    c1 += rank_j * d - (N + 1) * binomial(N + j - 1, N);
  }
  return c1;
}

}  // namespace jets
