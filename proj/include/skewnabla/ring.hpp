#pragma once

// Exact polynomial rings: Z[x1, ..., xN] as a sparse term map and Z[q] as a
// dense coefficient vector. Variable indices are 1-based, matching x1..xN.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "skewnabla/error.hpp"

namespace skewnabla {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector of a monomial; its length is always the ambient variable count.
using Exponent = boost::container::small_vector<std::uint32_t, 6>;

/// Sparse polynomial with integer coefficients in a fixed number of variables.
///
/// Terms are kept in canonical form: no zero coefficients, every exponent of
/// length nvars(), iteration in lexicographically descending exponent order.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Integer, std::greater<>>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Integer& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static MultiPoly one(std::size_t nvars) { return constant(nvars, 1); }

  /// The polynomial x_k, 1 <= k <= nvars.
  static MultiPoly variable(std::size_t nvars, std::size_t k) {
    if (k < 1 || k > nvars) {
      throw IndexError("variable index " + std::to_string(k) + " outside [1, " +
                       std::to_string(nvars) + "]");
    }
    Exponent e(nvars, 0);
    e[k - 1] = 1;
    MultiPoly p(nvars);
    p.add_term(e, 1);
    return p;
  }

  static MultiPoly monomial(const Exponent& e, const Integer& c) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Lex-greatest exponent. Precondition: !is_zero().
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Integer& leading_coefficient() const { return terms_.begin()->second; }

  /// Largest total degree of a term, -1 for the zero polynomial.
  long total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const long d = degree_of(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return degree_of(t.first) == d; });
  }

  /// Adds c * x^e, keeping the map canonical.
  void add_term(const Exponent& e, const Integer& c) {
    if (e.size() != nvars_) throw VariableCountError(e.size(), nvars_);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& r) {
    check_same_ring(r);
    for (const auto& [e, c] : r.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& r) {
    check_same_ring(r);
    for (const auto& [e, c] : r.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& r) { return p += r; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& r) { return p -= r; }
  friend MultiPoly operator*(MultiPoly p, const Integer& s) { return p *= s; }
  friend MultiPoly operator*(const Integer& s, MultiPoly p) { return p *= s; }

  friend MultiPoly operator-(MultiPoly p) {
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& r) {
    p.check_same_ring(r);
    MultiPoly out(p.nvars_);
    if (p.is_zero() || r.is_zero()) return out;
    Exponent scratch(p.nvars_, 0);
    Integer prod;
    for (const auto& [ea, ca] : p.terms_) {
      for (const auto& [eb, cb] : r.terms_) {
        for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = ea[i] + eb[i];
        prod = ca * cb;
        auto [it, inserted] = out.terms_.try_emplace(scratch, prod);
        if (!inserted) it->second += prod;
      }
    }
    std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
    return out;
  }

  MultiPoly& operator*=(const MultiPoly& r) { return *this = *this * r; }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  static long degree_of(const Exponent& e) {
    long d = 0;
    for (auto a : e) d += a;
    return d;
  }

  void check_same_ring(const MultiPoly& r) const {
    if (r.nvars_ != nvars_) throw VariableCountError(nvars_, r.nvars_);
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Formal partial derivative with respect to x_k, 1 <= k <= nvars.
inline MultiPoly partial(const MultiPoly& p, std::size_t k) {
  if (k < 1 || k > p.nvars()) {
    throw IndexError("variable index " + std::to_string(k) + " outside [1, " +
                     std::to_string(p.nvars()) + "]");
  }
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const auto a = e[k - 1];
    if (a == 0) continue;
    Exponent d = e;
    d[k - 1] = a - 1;
    out.add_term(d, c * a);
  }
  return out;
}

/// Quotient of an exact division p / d. Throws ExactDivisionError on a remainder.
inline MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (p.nvars() != d.nvars()) throw VariableCountError(p.nvars(), d.nvars());
  if (d.is_zero()) throw ExactDivisionError("division by the zero polynomial");
  MultiPoly quotient(p.nvars());
  MultiPoly rem = p;
  const Exponent& dlead = d.leading_exponent();
  const Integer& dcoef = d.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponent& rlead = rem.leading_exponent();
    Exponent shift(p.nvars(), 0);
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (rlead[i] < dlead[i]) throw ExactDivisionError("leading monomial not divisible");
      shift[i] = rlead[i] - dlead[i];
    }
    Integer q, r;
    boost::multiprecision::divide_qr(rem.leading_coefficient(), dcoef, q, r);
    if (r != 0) throw ExactDivisionError("leading coefficient not divisible");
    MultiPoly step = MultiPoly::monomial(shift, q);
    rem -= step * d;
    quotient += step;
  }
  return quotient;
}

/// Dense univariate polynomial in q with integer coefficients; coeffs()[k] multiplies q^k.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }
  explicit QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  QPoly(const Integer& c) {  // NOLINT: integers embed into Z[q]
    if (c != 0) coeffs_.push_back(c);
  }
  QPoly(long long c) : QPoly(Integer(c)) {}  // NOLINT
  QPoly(int c) : QPoly(Integer(c)) {}        // NOLINT

  static QPoly q() { return QPoly{0, 1}; }

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  /// Exact value at q = n (Horner).
  Integer operator()(const Integer& n) const {
    Integer v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * n + *it;
    return v;
  }

  QPoly& operator+=(const QPoly& r) {
    if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) coeffs_[k] += r.coeffs_[k];
    trim();
    return *this;
  }

  QPoly& operator-=(const QPoly& r) {
    if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) coeffs_[k] -= r.coeffs_[k];
    trim();
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPoly(std::move(out));
  }

  QPoly& operator*=(const QPoly& r) { return *this = *this * r; }

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Value of qp at q = n.
inline Integer evaluate(const QPoly& qp, const Integer& n) { return qp(n); }

}  // namespace skewnabla
