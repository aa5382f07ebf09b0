#pragma once

// Complete homogeneous polynomials, Jacobi-Trudi determinants, skew Schur
// polynomials, the tableau oracle and expansion in the Schur basis.

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "skewnabla/determinant.hpp"
#include "skewnabla/error.hpp"
#include "skewnabla/ring.hpp"
#include "skewnabla/shapes.hpp"

namespace skewnabla {

/// h_n(x1..xN): the sum of all monomials of total degree n. h_0 = 1, h_n = 0 for n < 0.
inline MultiPoly complete_homogeneous(int n, std::size_t nvars) {
  MultiPoly out(nvars);
  if (n < 0) return out;
  if (nvars == 0) return n == 0 ? MultiPoly::one(0) : out;
  // Weak compositions of n into nvars parts, lex descending.
  Exponent e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.add_term(e, 1);
      return;
    }
    for (std::uint32_t v = left + 1; v-- > 0;) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, static_cast<std::uint32_t>(n));
  return out;
}

/// Integer matrix of h-subscripts, entry(i, j) = rows[i] - cols[j].
class HIndexMatrix {
 public:
  HIndexMatrix(const ContentVector& rows, const ContentVector& cols) : size_(rows.values.size()) {
    if (cols.values.size() != size_) throw VariableCountError(size_, cols.values.size());
    entries_.reserve(size_ * size_);
    for (int r : rows.values)
      for (int c : cols.values) entries_.push_back(r - c);
  }

  std::size_t size() const noexcept { return size_; }
  /// 0-based (row, column).
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

  friend bool operator==(const HIndexMatrix&, const HIndexMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<int> entries_;
};

/// entry(i,j) = lambda_i - mu_j - i + j, i.e. l_i - m_j in shifted contents.
inline HIndexMatrix jt_matrix(const SkewShape& shape) {
  return HIndexMatrix(content(shape.outer), content(shape.inner));
}

enum class DetBackend { bareiss, leibniz };

/// Exact determinant of a matrix of polynomials in nvars variables.
inline MultiPoly det_poly(const Matrix<MultiPoly>& m, std::size_t nvars,
                          DetBackend backend = DetBackend::bareiss) {
  for (const auto& row : m)
    for (const auto& entry : row)
      if (entry.nvars() != nvars) throw VariableCountError(entry.nvars(), nvars);
  const MultiPoly one = MultiPoly::one(nvars);
  if (backend == DetBackend::leibniz) return det_leibniz(m, one);
  return det_bareiss(m, one, [](const MultiPoly& a, const MultiPoly& b) {
    return b == MultiPoly::one(b.nvars()) ? a : divide_exact(a, b);
  });
}

using SchurExpansion = std::map<Partition, Integer, std::greater<>>;

/// Memo table for h_n and skew Schur polynomials. Not thread-safe; give each
/// worker its own table.
class SchurTable {
 public:
  explicit SchurTable(DetBackend backend = DetBackend::bareiss) : backend_(backend) {}

  const MultiPoly& h(int n, std::size_t nvars) {
    if (n < 0) n = -1;
    auto key = std::make_pair(nvars, n);
    auto it = h_.find(key);
    if (it == h_.end()) it = h_.emplace(key, complete_homogeneous(n, nvars)).first;
    return it->second;
  }

  Matrix<MultiPoly> h_matrix(const HIndexMatrix& idx, std::size_t nvars) {
    Matrix<MultiPoly> m(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      m[i].reserve(idx.size());
      for (std::size_t j = 0; j < idx.size(); ++j) m[i].push_back(h(idx(i, j), nvars));
    }
    return m;
  }

  /// det(h_{rows_i - cols_j}) evaluated without the containment shortcut.
  MultiPoly content_determinant(const ContentVector& rows, const ContentVector& cols) {
    return det_poly(h_matrix(HIndexMatrix(rows, cols), rows.values.size()), rows.values.size(),
                    backend_);
  }

  /// s_{lambda/mu}; zero unless mu is contained in lambda.
  const MultiPoly& skew_schur(const SkewShape& shape) {
    auto it = schur_.find(shape);
    if (it != schur_.end()) return it->second;
    MultiPoly value(shape.nvars());
    if (contains(shape.inner, shape.outer)) {
      value = content_determinant(content(shape.outer), content(shape.inner));
    }
    return schur_.emplace(shape, std::move(value)).first->second;
  }

  const MultiPoly& schur(const Partition& lambda) {
    return skew_schur(SkewShape(lambda, Partition::zero(lambda.nvars())));
  }

  DetBackend backend() const noexcept { return backend_; }

 private:
  DetBackend backend_;
  std::map<std::pair<std::size_t, int>, MultiPoly> h_;
  std::map<SkewShape, MultiPoly> schur_;
};

/// Skew Schur polynomial via the Jacobi-Trudi determinant.
inline MultiPoly skew_schur(const SkewShape& shape, DetBackend backend = DetBackend::bareiss) {
  SchurTable table(backend);
  return table.skew_schur(shape);
}

/// Generating function of semistandard tableaux of shape lambda/mu with
/// entries in [N]. Independent of the determinant route.
inline MultiPoly ssyt_skew_schur(const SkewShape& shape) {
  const std::size_t n = shape.nvars();
  MultiPoly out(n);
  if (!contains(shape.inner, shape.outer)) return out;
  const Partition& lam = shape.outer;
  const Partition& mu = shape.inner;

  // Cells in column-major order, top to bottom within a column.
  struct Cell {
    std::size_t row;
    int col;
  };
  std::vector<Cell> cells;
  const int width = n == 0 ? 0 : lam[0];
  for (int c = 0; c < width; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (mu[r] <= c && c < lam[r]) cells.push_back({r, c});

  std::vector<std::vector<int>> grid(n);
  for (std::size_t r = 0; r < n; ++r) grid[r].assign(static_cast<std::size_t>(lam[r]), 0);
  auto in_shape = [&](std::size_t r, int c) { return c >= mu[r] && c < lam[r]; };

  Exponent weight(n, 0);
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.add_term(weight, 1);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0 && in_shape(r, c - 1)) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0 && in_shape(r - 1, c)) lo = std::max(lo, grid[r - 1][c] + 1);
    // Leave room for the strictly increasing cells below in this column.
    int below = 0;
    for (std::size_t rr = r + 1; rr < n && in_shape(rr, c); ++rr) ++below;
    const int hi = static_cast<int>(n) - below;
    for (int v = lo; v <= hi; ++v) {
      grid[r][c] = v;
      ++weight[v - 1];
      self(self, k + 1);
      --weight[v - 1];
    }
    grid[r][c] = 0;
  };
  fill(fill, 0);
  return out;
}

/// Greedy lex-leading elimination against Schur polynomials. Requires a
/// symmetric input; throws NotSymmetricError otherwise.
inline SchurExpansion expand_schur_basis(const MultiPoly& p, SchurTable& table) {
  SchurExpansion out;
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    const Exponent lead = rest.leading_exponent();
    const Integer c = rest.leading_coefficient();
    std::vector<int> parts(lead.begin(), lead.end());
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      if (parts[i] < parts[i + 1]) {
        throw NotSymmetricError("lex-leading exponent is not weakly decreasing");
      }
    }
    Partition alpha(std::move(parts));
    rest -= c * table.schur(alpha);
    out.emplace(std::move(alpha), c);
  }
  return out;
}

inline SchurExpansion expand_schur_basis(const MultiPoly& p) {
  SchurTable table;
  return expand_schur_basis(p, table);
}

/// sum of coeff * s_lambda over an expansion.
inline MultiPoly reconstruct(const SchurExpansion& e, std::size_t nvars, SchurTable& table) {
  MultiPoly out(nvars);
  for (const auto& [lambda, c] : e) out += c * table.schur(lambda);
  return out;
}

}  // namespace skewnabla
