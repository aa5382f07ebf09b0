#pragma once

// Partitions of length <= N stored as N-tuples, skew shapes, single-box moves
// and shifted contents. Box indices i are 1-based (they name e_i); operator[]
// is ordinary 0-based access.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewnabla/error.hpp"

namespace skewnabla {

/// A weakly decreasing N-tuple of nonnegative integers. Trailing zeros are
/// significant: the tuple length is the ambient variable count N.
class Partition {
 public:
  Partition() = default;

  /// Validates the chain parts[0] >= parts[1] >= ... >= parts[N-1] >= 0.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) {
        throw PartitionError("negative entry at position " + std::to_string(i + 1));
      }
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
        throw PartitionError("not weakly decreasing at positions " + std::to_string(i + 1) +
                             "," + std::to_string(i + 2));
      }
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition zero(std::size_t nvars) { return Partition(std::vector<int>(nvars, 0)); }

  std::size_t nvars() const noexcept { return parts_.size(); }
  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// |lambda|
  int size() const noexcept {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  /// Number of nonzero parts.
  std::size_t length() const noexcept {
    std::size_t n = 0;
    while (n < parts_.size() && parts_[n] > 0) ++n;
    return n;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline Partition make_partition(std::vector<int> raw) { return Partition(std::move(raw)); }

/// The pair lambda/mu. Containment is not required.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition lambda, Partition mu) : outer(std::move(lambda)), inner(std::move(mu)) {
    if (outer.nvars() != inner.nvars()) throw VariableCountError(outer.nvars(), inner.nvars());
  }

  std::size_t nvars() const noexcept { return outer.nvars(); }

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// Shifted contents lambda_i - i (1-based i); strictly decreasing for a partition.
struct ContentVector {
  std::vector<int> values;
  friend bool operator==(const ContentVector&, const ContentVector&) = default;
};

namespace detail {
inline void check_box_index(const Partition& p, std::size_t i) {
  if (i < 1 || i > p.nvars()) {
    throw IndexError("box index " + std::to_string(i) + " outside [1, " +
                     std::to_string(p.nvars()) + "]");
  }
}
}  // namespace detail

/// lambda - e_i if that is still in P_N.
inline std::optional<Partition> remove_box(const Partition& lambda, std::size_t i) {
  detail::check_box_index(lambda, i);
  const int v = lambda[i - 1] - 1;
  if (v < 0) return std::nullopt;
  if (i < lambda.nvars() && v < lambda[i]) return std::nullopt;
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  parts[i - 1] = v;
  return Partition(std::move(parts));
}

/// mu + e_i if that is still in P_N.
inline std::optional<Partition> add_box(const Partition& mu, std::size_t i) {
  detail::check_box_index(mu, i);
  const int v = mu[i - 1] + 1;
  if (i > 1 && v > mu[i - 2]) return std::nullopt;
  std::vector<int> parts(mu.parts().begin(), mu.parts().end());
  parts[i - 1] = v;
  return Partition(std::move(parts));
}

inline ContentVector content(const Partition& lambda) {
  ContentVector c;
  c.values.reserve(lambda.nvars());
  for (std::size_t i = 0; i < lambda.nvars(); ++i) c.values.push_back(lambda[i] - static_cast<int>(i + 1));
  return c;
}

/// mu is contained in lambda: mu_i <= lambda_i for every i.
inline bool contains(const Partition& mu, const Partition& lambda) {
  if (mu.nvars() != lambda.nvars()) throw VariableCountError(mu.nvars(), lambda.nvars());
  for (std::size_t i = 0; i < mu.nvars(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

namespace detail {
template <class Visit>
void enumerate_parts(std::vector<int>& parts, std::size_t pos, int max_part, int budget,
                     Visit& visit) {
  if (pos == parts.size()) {
    visit(parts);
    return;
  }
  for (int v = std::min(max_part, budget); v >= 0; --v) {
    parts[pos] = v;
    enumerate_parts(parts, pos + 1, v, budget - v, visit);
  }
  parts[pos] = 0;
}
}  // namespace detail

/// All members of P_N with |lambda| <= max_size and lambda_1 <= max_part, in
/// lexicographically descending order of parts.
inline std::vector<Partition> partitions(std::size_t nvars, int max_size, int max_part = -1) {
  std::vector<Partition> out;
  if (max_size < 0) return out;
  if (max_part < 0) max_part = max_size;
  std::vector<int> parts(nvars, 0);
  auto visit = [&out](const std::vector<int>& p) { out.emplace_back(p); };
  detail::enumerate_parts(parts, 0, max_part, max_size, visit);
  return out;
}

/// All mu in P_N with mu contained in lambda, lexicographically descending.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> parts(lambda.nvars(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int cap) -> void {
    if (pos == parts.size()) {
      out.emplace_back(parts);
      return;
    }
    for (int v = std::min(cap, lambda[pos]); v >= 0; --v) {
      parts[pos] = v;
      self(self, pos + 1, v);
    }
    parts[pos] = 0;
  };
  rec(rec, 0, lambda.nvars() == 0 ? 0 : lambda[0]);
  return out;
}

/// "(3,2,1)"; the N = 0 partition prints as "()".
inline std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

inline std::string to_string(const SkewShape& s) {
  return to_string(s.outer) + "/" + to_string(s.inner);
}

namespace detail {
inline std::vector<int> parse_parts(std::string_view text) {
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::vector<int> parts;
  if (trimmed(text).empty()) return parts;
  for (std::size_t start = 0; start <= text.size();) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string tok(trimmed(text.substr(start, end - start)));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) {
      throw ParseError("bad part '" + tok + "' in partition '" + std::string(text) + "'");
    }
    parts.push_back(v);
    start = end + 1;
  }
  return parts;
}
}  // namespace detail

/// Parses comma-separated parts ("3,2,1"). Missing trailing parts are zero;
/// the empty string is the zero partition of length nvars.
inline Partition parse_partition(std::string_view text, std::size_t nvars) {
  auto parts = detail::parse_parts(text);
  if (parts.size() > nvars) {
    throw ParseError("partition '" + std::string(text) + "' has more than " +
                     std::to_string(nvars) + " parts");
  }
  parts.resize(nvars, 0);
  return Partition(std::move(parts));
}

/// Parses a partition whose length is the number of listed parts.
inline Partition parse_partition(std::string_view text) { return Partition(detail::parse_parts(text)); }

}  // namespace skewnabla
