#pragma once

// Exact determinants over commutative rings. Elements must provide the ring
// operators, unary minus, and is_zero().

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "skewnabla/error.hpp"

namespace skewnabla {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
void require_square(const Matrix<T>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw ParameterError("determinant of a non-square matrix");
  }
}

/// Fraction-free Bareiss elimination. `divide(num, den)` must return the exact
/// quotient; every division performed here is exact in an integral domain.
template <class T, class ExactDivide>
T det_bareiss(Matrix<T> m, const T& one, ExactDivide divide) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return one - one;
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Signed sum over all permutations of [n]. O(n * n!); used as a cross-check.
template <class T>
T det_leibniz(const Matrix<T>& m, const T& one) {
  require_square(m);
  const std::size_t n = m.size();
  T total = one - one;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool vanishes = false;
    for (std::size_t i = 0; i < n && !vanishes; ++i) vanishes = m[i][sigma[i]].is_zero();
    if (vanishes) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += sigma[i] > sigma[j];
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][sigma[i]];
    if (inversions % 2 == 0) {
      total = total + term;
    } else {
      total = total - term;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

/// Permutation expansion with memoized partial products: row r is matched to a
/// column after rows 0..r-1 have consumed the column set `mask`, and partial
/// products are shared between permutations with the same prefix column set.
template <class T>
T det_memoized_expansion(const Matrix<T>& m, const T& one) {
  require_square(m);
  const std::size_t n = m.size();
  if (n > 20) throw ParameterError("memoized expansion limited to 20x20 matrices");
  const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
  std::vector<std::optional<T>> partial(std::size_t{1} << n);
  partial[0] = one;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!partial[mask] || partial[mask]->is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1u) continue;
      if (m[row][j].is_zero()) continue;
      // Columns already used that exceed j each form one inversion with j.
      const int above = std::popcount(mask >> (j + 1));
      T term = *partial[mask] * m[row][j];
      auto& slot = partial[mask | (1u << j)];
      if (!slot) slot = one - one;
      if (above % 2 == 0) {
        *slot = *slot + term;
      } else {
        *slot = *slot - term;
      }
    }
    partial[mask].reset();
  }
  return partial[full] ? *partial[full] : one - one;
}

}  // namespace skewnabla
