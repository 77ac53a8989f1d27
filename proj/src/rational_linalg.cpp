#include "jets/rational_linalg.hpp"

#include <stdexcept>

namespace jets {

SparseEchelon::SparseEchelon(int columns) : pivots_(static_cast<std::size_t>(columns)) {}

namespace {

// row - factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -(factor * b->second));
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add_row(SparseRow row) {
  while (!row.empty()) {
    const int lead = row.front().first;
    if (lead < 0 || static_cast<std::size_t>(lead) >= pivots_.size())
      throw std::out_of_range("sparse row column out of range");
    auto& slot = pivots_[static_cast<std::size_t>(lead)];
    if (!slot) {
      const Rational inv = Rational(1) / row.front().second;
      for (auto& [c, v] : row) v *= inv;
      slot = std::move(row);
      ++rank_;
      return true;
    }
    row = axpy(row, row.front().second, *slot);
  }
  return false;
}

std::optional<std::vector<Rational>> left_null_vector(const DenseMatrix& a) {
  // Solve a^T c = 0 by Gauss-Jordan on the transpose.
  const std::size_t rows = a.size();
  if (rows == 0) return std::nullopt;
  const std::size_t cols = a.front().size();
  DenseMatrix t(cols, std::vector<Rational>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];

  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(rows, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < cols; ++c) {
    std::size_t p = r;
    while (p < cols && t[p][c].is_zero()) ++p;
    if (p == cols) continue;
    std::swap(t[p], t[r]);
    const Rational inv = Rational(1) / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (std::size_t i = 0; i < cols; ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j < rows; ++j) t[i][j] -= f * t[r][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    is_pivot[c] = true;
    ++r;
  }
  std::size_t free_col = rows;
  for (std::size_t c = 0; c < rows; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == rows) return std::nullopt;
  std::vector<Rational> v(rows, Rational(0));
  v[free_col] = Rational(1);
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
    v[static_cast<std::size_t>(pivot_col_of_row[i])] = -t[i][free_col];
  return v;
}

}  // namespace jets
