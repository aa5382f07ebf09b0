#pragma once

// Seeded generators of small random ring elements for property checks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "skewnabla/lambda.hpp"
#include "skewnabla/ring.hpp"

namespace skewnabla {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Up to max_terms terms of total degree <= max_degree, coefficients in [-bound, bound].
inline MultiPoly random_multipoly(Rng& rng, std::size_t nvars, unsigned max_degree,
                                  std::size_t max_terms = 4, long long bound = 3) {
  MultiPoly p(nvars);
  const auto terms = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(nvars, 0);
    auto degree = static_cast<unsigned>(uniform(rng, 0, max_degree));
    while (degree-- > 0 && nvars > 0) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(nvars) - 1))];
    p.add_term(e, uniform(rng, -bound, bound));
  }
  return p;
}

inline QPoly random_qpoly(Rng& rng, unsigned max_degree, long long bound = 3) {
  std::vector<Integer> c(max_degree + 1);
  for (auto& v : c) v = uniform(rng, -bound, bound);
  return QPoly(std::move(c));
}

/// Sum of up to max_terms terms c * h_{v1}...h_{vk} with k <= max_factors,
/// v_i <= max_part and q-degree of c <= max_qdegree.
inline LambdaElement random_lambda(Rng& rng, unsigned max_part = 5, std::size_t max_factors = 3,
                                   unsigned max_qdegree = 2, std::size_t max_terms = 3) {
  LambdaElement u;
  const auto terms = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<int> parts(static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(max_factors))));
    for (auto& v : parts) v = static_cast<int>(uniform(rng, 1, max_part));
    u += LambdaElement::term(std::move(parts), random_qpoly(rng, max_qdegree));
  }
  return u;
}

}  // namespace skewnabla
