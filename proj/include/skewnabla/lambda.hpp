#pragma once

// Symmetric functions in infinitely many variables over Z[q], written in the
// multiplicative h-basis, together with the derivation nabla_q and the
// evaluation homomorphism to N variables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewnabla/determinant.hpp"
#include "skewnabla/error.hpp"
#include "skewnabla/ring.hpp"
#include "skewnabla/shapes.hpp"
#include "skewnabla/symfunc.hpp"

namespace skewnabla {

/// h_{v1} h_{v2} ... with v1 >= v2 >= ... >= 1.
using HMonomial = std::vector<std::uint32_t>;

class LambdaElement {
 public:
  using TermMap = std::map<HMonomial, QPoly, std::greater<>>;

  LambdaElement() = default;

  static LambdaElement scalar(const QPoly& c) {
    LambdaElement e;
    e.add_term({}, c);
    return e;
  }

  static LambdaElement one() { return scalar(1); }

  /// h_n; zero for n < 0 and one for n = 0.
  static LambdaElement generator(int n) {
    if (n < 0) return {};
    if (n == 0) return one();
    LambdaElement e;
    e.add_term({static_cast<std::uint32_t>(n)}, 1);
    return e;
  }

  /// c * h_{parts}; parts may be in any order and may contain zeros (h_0 = 1).
  static LambdaElement term(std::vector<int> parts, const QPoly& c) {
    LambdaElement e;
    HMonomial mono;
    for (int p : parts) {
      if (p < 0) return e;
      if (p > 0) mono.push_back(static_cast<std::uint32_t>(p));
    }
    std::sort(mono.begin(), mono.end(), std::greater<>());
    e.add_term(mono, c);
    return e;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  QPoly coefficient(const HMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QPoly() : it->second;
  }

  /// Precondition: `mono` is sorted descending without zeros.
  void add_term(const HMonomial& mono, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LambdaElement& operator+=(const LambdaElement& r) {
    for (const auto& [m, c] : r.terms_) add_term(m, c);
    return *this;
  }
  LambdaElement& operator-=(const LambdaElement& r) {
    for (const auto& [m, c] : r.terms_) add_term(m, -c);
    return *this;
  }
  LambdaElement& operator*=(const QPoly& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
  friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
  friend LambdaElement operator*(LambdaElement a, const QPoly& s) { return a *= s; }
  friend LambdaElement operator*(const QPoly& s, LambdaElement a) { return a *= s; }
  friend LambdaElement operator-(LambdaElement a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }

  /// h-index multisets merge; coefficients multiply in Z[q].
  friend LambdaElement operator*(const LambdaElement& u, const LambdaElement& v) {
    LambdaElement out;
    HMonomial merged;
    for (const auto& [mu, cu] : u.terms_) {
      for (const auto& [mv, cv] : v.terms_) {
        merged.resize(mu.size() + mv.size());
        std::merge(mu.begin(), mu.end(), mv.begin(), mv.end(), merged.begin(), std::greater<>());
        out.add_term(merged, cu * cv);
      }
    }
    return out;
  }
  LambdaElement& operator*=(const LambdaElement& r) { return *this = *this * r; }

  friend bool operator==(const LambdaElement&, const LambdaElement&) = default;

 private:
  TermMap terms_;
};

/// Largest determinant size accepted by lambda_skew_schur.
inline constexpr std::size_t kMaxLambdaDeterminant = 12;

/// s_{lambda/mu} in the h-basis via a Jacobi-Trudi determinant of the given
/// size; size 0 selects max(length lambda, length mu) + 1. The input tuples may
/// have any length; only their nonzero parts matter.
inline LambdaElement lambda_skew_schur(const Partition& lambda, const Partition& mu,
                                       std::size_t size = 0) {
  const std::size_t longest = std::max(lambda.length(), mu.length());
  if (size == 0) size = longest + 1;
  if (size < longest) {
    throw ParameterError("determinant size " + std::to_string(size) +
                         " is smaller than the partition lengths");
  }
  if (size > kMaxLambdaDeterminant) {
    throw ParameterError("determinant size " + std::to_string(size) + " exceeds " +
                         std::to_string(kMaxLambdaDeterminant));
  }
  auto part = [](const Partition& p, std::size_t i) { return i < p.nvars() ? p[i] : 0; };
  for (std::size_t i = 0; i < longest; ++i) {
    if (part(mu, i) > part(lambda, i)) return {};
  }
  Matrix<LambdaElement> m(size);
  for (std::size_t i = 0; i < size; ++i) {
    m[i].reserve(size);
    for (std::size_t j = 0; j < size; ++j) {
      const int idx = part(lambda, i) - part(mu, j) - static_cast<int>(i) + static_cast<int>(j);
      m[i].push_back(LambdaElement::generator(idx));
    }
  }
  return det_memoized_expansion(m, LambdaElement::one());
}

/// The derivation with nabla_q(h_n) = (n + q - 1) h_{n-1}, extended by Leibniz.
inline LambdaElement nabla_q(const LambdaElement& u) {
  LambdaElement out;
  for (const auto& [mono, coef] : u.terms()) {
    std::size_t i = 0;
    while (i < mono.size()) {
      const auto v = mono[i];
      std::size_t j = i;
      while (j < mono.size() && mono[j] == v) ++j;
      const auto mult = static_cast<long long>(j - i);
      // Lowering the last copy of v keeps the monomial sorted.
      HMonomial lowered = mono;
      if (v == 1) {
        lowered.erase(lowered.begin() + static_cast<std::ptrdiff_t>(j - 1));
      } else {
        lowered[j - 1] = v - 1;
      }
      const QPoly factor{Integer(mult) * (static_cast<long long>(v) - 1), Integer(mult)};
      out.add_term(lowered, coef * factor);
      i = j;
    }
  }
  return out;
}

/// Evaluation at x1..xN, 0, 0, ... with q specialized to N.
inline MultiPoly specialize(const LambdaElement& u, std::size_t nvars, SchurTable& table) {
  MultiPoly out(nvars);
  for (const auto& [mono, coef] : u.terms()) {
    const Integer c = coef(Integer(nvars));
    if (c == 0) continue;
    MultiPoly prod = MultiPoly::constant(nvars, c);
    for (auto v : mono) prod = prod * table.h(static_cast<int>(v), nvars);
    out += prod;
  }
  return out;
}

inline MultiPoly specialize(const LambdaElement& u, std::size_t nvars) {
  SchurTable table;
  return specialize(u, nvars, table);
}

struct LambdaCornerTerm {
  std::size_t index;  // 1-based i
  QPoly coefficient;
  Partition part;
  bool operator==(const LambdaCornerTerm&) const = default;
};

struct Theorem3Report {
  Partition outer;
  Partition inner;
  QPoly a;
  QPoly b;
  LambdaElement lhs;
  LambdaElement rhs;
  std::vector<LambdaCornerTerm> outer_terms;
  std::vector<LambdaCornerTerm> inner_terms;
  bool verdict = false;
};

/// Checks nabla_q(s_{lambda/mu}) against the corner sums with a + b = q - 1.
/// The sums run over i = 1..L+1, L the larger length; no box can be removed or
/// added beyond that row.
inline Theorem3Report check_theorem3(const Partition& lambda, const Partition& mu, const QPoly& a,
                                     const QPoly& b, std::size_t det_size = 0) {
  if (a + b != QPoly{-1, 1}) throw ParameterError("a + b must equal q - 1");
  const std::size_t width = std::max(lambda.length(), mu.length()) + 1;
  auto padded = [width](const Partition& p) {
    std::vector<int> parts(width, 0);
    for (std::size_t i = 0; i < std::min(width, p.nvars()); ++i) parts[i] = p[i];
    return Partition(std::move(parts));
  };
  Theorem3Report rep;
  rep.outer = padded(lambda);
  rep.inner = padded(mu);
  rep.a = a;
  rep.b = b;
  auto schur = [det_size](const Partition& l, const Partition& m) {
    const std::size_t need = std::max(l.length(), m.length()) + 1;
    return lambda_skew_schur(l, m, det_size == 0 ? 0 : std::max(det_size, need));
  };
  rep.lhs = nabla_q(schur(rep.outer, rep.inner));
  for (std::size_t i = 1; i <= width; ++i) {
    if (auto smaller = remove_box(rep.outer, i)) {
      QPoly coef = a + QPoly(rep.outer[i - 1] - static_cast<int>(i));
      rep.rhs += schur(*smaller, rep.inner) * coef;
      rep.outer_terms.push_back({i, coef, std::move(*smaller)});
    }
    if (auto bigger = add_box(rep.inner, i)) {
      QPoly coef = b - QPoly(rep.inner[i - 1] - static_cast<int>(i));
      rep.rhs += schur(rep.outer, *bigger) * coef;
      rep.inner_terms.push_back({i, coef, std::move(*bigger)});
    }
  }
  rep.verdict = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace skewnabla
