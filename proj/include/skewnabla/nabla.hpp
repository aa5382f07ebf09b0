#pragma once

// The diagonal derivative and its corner-sum formula for skew Schur polynomials.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewnabla/error.hpp"
#include "skewnabla/ring.hpp"
#include "skewnabla/shapes.hpp"
#include "skewnabla/symfunc.hpp"

namespace skewnabla {

/// d/dx1 + ... + d/dxN.
inline MultiPoly nabla(const MultiPoly& p) {
  MultiPoly out(p.nvars());
  for (std::size_t k = 1; k <= p.nvars(); ++k) out += partial(p, k);
  return out;
}

/// d^2/dx1^2 + ... + d^2/dxN^2.
inline MultiPoly nabla_prime(const MultiPoly& p) {
  MultiPoly out(p.nvars());
  for (std::size_t k = 1; k <= p.nvars(); ++k) out += partial(partial(p, k), k);
  return out;
}

/// nabla(h_n) == (n + N - 1) h_{n-1}, compared exactly.
inline bool nabla_h_check(int n, std::size_t nvars) {
  const auto lhs = nabla(complete_homogeneous(n, nvars));
  const auto rhs = Integer(n + static_cast<long>(nvars) - 1) * complete_homogeneous(n - 1, nvars);
  return lhs == rhs;
}

/// One addend of a corner sum: coefficient * s of the shape built from `part`.
struct CornerTerm {
  std::size_t index;  // 1-based i
  Integer coefficient;
  Partition part;     // lambda - e_i (outer) or mu + e_i (inner)
  bool operator==(const CornerTerm&) const = default;
};

struct Theorem1Report {
  SkewShape shape;
  std::int64_t a = 0;
  std::int64_t b = 0;
  MultiPoly lhs;
  MultiPoly rhs;
  std::vector<CornerTerm> outer_terms;
  std::vector<CornerTerm> inner_terms;
  bool verdict = false;
};

namespace detail {
inline void check_ab(std::size_t nvars, std::int64_t a, std::int64_t b) {
  if (a + b != static_cast<std::int64_t>(nvars) - 1) {
    throw ParameterError("a + b must equal N - 1 = " + std::to_string(static_cast<long>(nvars) - 1) +
                         ", got a = " + std::to_string(a) + ", b = " + std::to_string(b));
  }
}
}  // namespace detail

/// Populates the corner-term lists and rhs; lhs and verdict are left empty.
inline Theorem1Report theorem1_rhs(const SkewShape& shape, std::int64_t a, std::int64_t b,
                                   SchurTable& table) {
  const std::size_t n = shape.nvars();
  detail::check_ab(n, a, b);
  Theorem1Report rep;
  rep.shape = shape;
  rep.a = a;
  rep.b = b;
  rep.lhs = MultiPoly(n);
  rep.rhs = MultiPoly(n);
  const auto ell = content(shape.outer).values;
  const auto m = content(shape.inner).values;
  for (std::size_t i = 1; i <= n; ++i) {
    if (auto smaller = remove_box(shape.outer, i)) {
      Integer coef = Integer(ell[i - 1]) + a;
      rep.rhs += coef * table.skew_schur(SkewShape(*smaller, shape.inner));
      rep.outer_terms.push_back({i, coef, std::move(*smaller)});
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (auto bigger = add_box(shape.inner, i)) {
      Integer coef = Integer(b) - m[i - 1];
      rep.rhs += coef * table.skew_schur(SkewShape(shape.outer, *bigger));
      rep.inner_terms.push_back({i, coef, std::move(*bigger)});
    }
  }
  return rep;
}

inline Theorem1Report theorem1_rhs(const SkewShape& shape, std::int64_t a, std::int64_t b) {
  SchurTable table;
  return theorem1_rhs(shape, a, b, table);
}

/// Compares nabla(s_{lambda/mu}) against the outer/inner corner sums.
inline Theorem1Report check_theorem1(const SkewShape& shape, std::int64_t a, std::int64_t b,
                                     SchurTable& table) {
  auto rep = theorem1_rhs(shape, a, b, table);
  rep.lhs = nabla(table.skew_schur(shape));
  rep.verdict = rep.lhs == rep.rhs;
  return rep;
}

inline Theorem1Report check_theorem1(const SkewShape& shape, std::int64_t a, std::int64_t b) {
  SchurTable table;
  return check_theorem1(shape, a, b, table);
}

/// True when every inner addend has a zero coefficient or a vanishing Schur factor.
inline bool inner_sum_vanishes(const Theorem1Report& rep, SchurTable& table) {
  for (const auto& t : rep.inner_terms) {
    if (t.coefficient != 0 && !table.skew_schur(SkewShape(rep.shape.outer, t.part)).is_zero()) {
      return false;
    }
  }
  return true;
}

/// (sum over removable outer boxes, sum over addable inner boxes) of skew Schur polynomials.
inline std::pair<MultiPoly, MultiPoly> corollary2_sides(const SkewShape& shape, SchurTable& table) {
  const std::size_t n = shape.nvars();
  MultiPoly left(n), right(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (auto smaller = remove_box(shape.outer, i)) left += table.skew_schur(SkewShape(*smaller, shape.inner));
    if (auto bigger = add_box(shape.inner, i)) right += table.skew_schur(SkewShape(shape.outer, *bigger));
  }
  return {std::move(left), std::move(right)};
}

inline std::pair<MultiPoly, MultiPoly> corollary2_sides(const SkewShape& shape) {
  SchurTable table;
  return corollary2_sides(shape, table);
}

}  // namespace skewnabla
