#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "svred/polynomial.hpp"

namespace svred::linalg {

/// Row of a sparse matrix: (column, value) pairs, columns strictly increasing.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
using DenseMatrix = std::vector<std::vector<Rational>>;

/// Exact rank over Q by sparse Gaussian elimination.
std::size_t rank(std::vector<SparseRow> rows);

Rational determinant(DenseMatrix m);

/// Calls `visit(columns, minor)` for every maximal minor of a k x c matrix
/// with k <= c, columns in lexicographic order.
template <class Visit>
void for_each_maximal_minor(const DenseMatrix& m, std::size_t columns, Visit&& visit);

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace svred::linalg

namespace svred::linalg {

template <class Visit>
void for_each_maximal_minor(const DenseMatrix& m, std::size_t columns, Visit&& visit) {
  const std::size_t k = m.size();
  for (const auto& cols : combinations(columns, k)) {
    DenseMatrix sub(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][cols[j]];
    visit(cols, determinant(std::move(sub)));
  }
}

}  // namespace svred::linalg
