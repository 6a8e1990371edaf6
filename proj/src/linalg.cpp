#include "svred/linalg.hpp"

#include <algorithm>
#include <map>

namespace svred::linalg {

namespace {

// row <- row - factor * pivot_row
SparseRow axpy(const SparseRow& row, const SparseRow& pivot_row, const Rational& factor) {
  SparseRow out;
  out.reserve(row.size() + pivot_row.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot_row.size()) {
    if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot_row[j].first < row[i].first) {
      out.emplace_back(pivot_row[j].first, -factor * pivot_row[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot_row[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(std::vector<SparseRow> rows) {
  // Pivot on the leading column of each row; rows sharing a leading column
  // are reduced by the shortest one (cheap fill-in heuristic).
  std::map<std::size_t, SparseRow> pivots;
  std::sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const SparseRow& p = it->second;
      Rational factor = row.front().second / p.front().second;
      row = axpy(row, p, factor);
    }
  }
  return pivots.size();
}

Rational determinant(DenseMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace svred::linalg
