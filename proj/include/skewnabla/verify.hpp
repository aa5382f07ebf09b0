#pragma once

// Exhaustive bounded sweeps over the identities for skew Schur polynomials and
// the diagonal derivative. Cases are enumerated in a fixed order, evaluated
// independently, and merged back in that order.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "skewnabla/error.hpp"
#include "skewnabla/lambda.hpp"
#include "skewnabla/nabla.hpp"
#include "skewnabla/random.hpp"
#include "skewnabla/serialize.hpp"
#include "skewnabla/shapes.hpp"
#include "skewnabla/symfunc.hpp"

namespace skewnabla {

enum class Identity {
  theorem1,
  corollary2,
  lemma_nabla_h,
  det_lemmas,
  theorem3,
  oracle_equiv,
  weigandt,
  nabla_q_commutation,
  det_backends,
  leibniz,
};

inline constexpr std::pair<Identity, std::string_view> kIdentityNames[] = {
    {Identity::theorem1, "theorem1"},
    {Identity::corollary2, "corollary2"},
    {Identity::lemma_nabla_h, "lemma_nabla_h"},
    {Identity::det_lemmas, "det_lemmas"},
    {Identity::theorem3, "theorem3"},
    {Identity::oracle_equiv, "oracle_equiv"},
    {Identity::weigandt, "weigandt"},
    {Identity::nabla_q_commutation, "nabla_q_commutation"},
    {Identity::det_backends, "det_backends"},
    {Identity::leibniz, "leibniz"},
};

inline std::string_view to_string(Identity id) {
  for (const auto& [v, name] : kIdentityNames)
    if (v == id) return name;
  return "unknown";
}

inline Identity parse_identity(std::string_view name) {
  for (const auto& [v, n] : kIdentityNames)
    if (n == name) return v;
  throw ParseError("unknown identity '" + std::string(name) + "'");
}

/// An integer a, optionally measured from the variable count ("N", "N-1", "N+2").
struct AValue {
  std::int64_t offset = 0;
  bool relative_to_n = false;

  std::int64_t resolve(std::size_t nvars) const {
    return offset + (relative_to_n ? static_cast<std::int64_t>(nvars) : 0);
  }

  std::string str() const {
    if (!relative_to_n) return std::to_string(offset);
    if (offset == 0) return "N";
    return offset > 0 ? "N+" + std::to_string(offset) : "N" + std::to_string(offset);
  }

  static AValue parse(std::string_view s) {
    AValue v;
    std::string_view rest = s;
    if (!rest.empty() && rest.front() == 'N') {
      v.relative_to_n = true;
      rest.remove_prefix(1);
      if (rest.empty()) return v;
      if (rest.front() != '+' && rest.front() != '-') throw ParseError("bad a value '" + std::string(s) + "'");
    }
    std::size_t used = 0;
    try {
      v.offset = std::stoll(std::string(rest), &used);
    } catch (const std::exception&) {
      throw ParseError("bad a value '" + std::string(s) + "'");
    }
    if (used != rest.size()) throw ParseError("bad a value '" + std::string(s) + "'");
    return v;
  }

  bool operator==(const AValue&) const = default;
};

/// The a-values {-2, 0, N-1, N, N+2}.
inline std::vector<AValue> default_a_values() {
  return {{-2, false}, {0, false}, {-1, true}, {0, true}, {2, true}};
}

struct SweepConfig {
  Identity identity = Identity::theorem1;
  /// Variable count bound; for theorem3 the bound on partition length.
  int max_nvars = 3;
  /// Bound on |lambda|; for lemma_nabla_h the largest n.
  int max_size = 6;
  std::vector<AValue> a_values;
  std::uint64_t seed = 0;
  /// Number of random instances for the randomized identities.
  std::size_t samples = 200;
  bool fail_fast = false;
  /// Worker count; 0 picks the hardware concurrency.
  unsigned threads = 1;

  void validate() const {
    if (max_nvars < 1) throw ParameterError("max_nvars must be positive");
    if (max_size < 1) throw ParameterError("max_size must be positive");
    if (identity == Identity::theorem1 && a_values.empty()) {
      throw ParameterError("theorem1 sweeps need at least one a value");
    }
    if (samples == 0) throw ParameterError("samples must be positive");
  }
};

struct Failure {
  std::string description;
  std::string lhs;
  std::string rhs;
  bool operator==(const Failure&) const = default;
};

struct SweepReport {
  SweepConfig config;
  std::size_t cases_run = 0;
  std::map<std::string, std::size_t> cases_by_kind;
  std::vector<Failure> failures;
  double wall_time_s = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

namespace detail {

struct Workspace {
  SchurTable table;
};

struct CaseResult {
  bool ok = true;
  std::string lhs;
  std::string rhs;
};

struct SweepCase {
  std::string kind;
  std::string description;
  std::function<CaseResult(Workspace&)> run;
};

template <class T>
CaseResult compare(const T& lhs, const T& rhs) {
  if (lhs == rhs) return {};
  return {false, to_text(lhs), to_text(rhs)};
}

/// (N, lambda, mu) with |lambda| <= max_size and mu any partition with
/// mu_1 <= lambda_1, |mu| <= |lambda|; contained and non-contained pairs.
template <class Visit>
void for_each_pair(const SweepConfig& cfg, Visit&& visit) {
  for (int n = 1; n <= cfg.max_nvars; ++n) {
    for (const auto& lambda : partitions(static_cast<std::size_t>(n), cfg.max_size)) {
      const int lambda1 = lambda.nvars() ? lambda[0] : 0;
      for (const auto& mu : partitions(static_cast<std::size_t>(n), lambda.size(), lambda1)) {
        visit(SkewShape(lambda, mu));
      }
    }
  }
}

inline void add_theorem1_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  for_each_pair(cfg, [&](const SkewShape& shape) {
    for (const auto& av : cfg.a_values) {
      const std::int64_t a = av.resolve(shape.nvars());
      const std::int64_t b = static_cast<std::int64_t>(shape.nvars()) - 1 - a;
      cases.push_back({"theorem1",
                       "theorem1 N=" + std::to_string(shape.nvars()) + " " + to_string(shape) +
                           " a=" + std::to_string(a) + " b=" + std::to_string(b),
                       [shape, a, b](Workspace& ws) {
                         auto rep = check_theorem1(shape, a, b, ws.table);
                         if (rep.verdict) return CaseResult{};
                         return CaseResult{false, to_text(rep.lhs), to_text(rep.rhs)};
                       }});
    }
  });
}

inline void add_corollary2_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  for_each_pair(cfg, [&](const SkewShape& shape) {
    cases.push_back({"corollary2", "corollary2 N=" + std::to_string(shape.nvars()) + " " + to_string(shape),
                     [shape](Workspace& ws) {
                       auto [left, right] = corollary2_sides(shape, ws.table);
                       return compare(left, right);
                     }});
  });
}

inline void add_nabla_h_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  for (int n = 0; n <= cfg.max_nvars; ++n) {
    for (int deg = -2; deg <= cfg.max_size; ++deg) {
      const auto nv = static_cast<std::size_t>(n);
      cases.push_back({"lemma_nabla_h", "lemma_nabla_h N=" + std::to_string(n) + " n=" + std::to_string(deg),
                       [nv, deg](Workspace& ws) {
                         return compare(nabla(ws.table.h(deg, nv)),
                                        Integer(deg + static_cast<long>(nv) - 1) * ws.table.h(deg - 1, nv));
                       }});
    }
  }
}

inline void add_det_lemma_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  for_each_pair(cfg, [&](const SkewShape& shape) {
    const std::string where = " N=" + std::to_string(shape.nvars()) + " " + to_string(shape);
    cases.push_back({"det.s", "det.s" + where, [shape](Workspace& ws) {
                       return compare(ws.table.content_determinant(content(shape.outer), content(shape.inner)),
                                      ws.table.skew_schur(shape));
                     }});
    for (std::size_t k = 1; k <= shape.nvars(); ++k) {
      const std::string at = where + " k=" + std::to_string(k);
      const auto smaller = remove_box(shape.outer, k);
      cases.push_back({smaller ? "det1.rows" : "det0.rows", (smaller ? "det1.rows" : "det0.rows") + at,
                       [shape, k, smaller](Workspace& ws) {
                         auto rows = content(shape.outer);
                         rows.values[k - 1] -= 1;
                         auto det = ws.table.content_determinant(rows, content(shape.inner));
                         if (smaller) return compare(det, ws.table.skew_schur(SkewShape(*smaller, shape.inner)));
                         return compare(det, MultiPoly(shape.nvars()));
                       }});
      const auto bigger = add_box(shape.inner, k);
      cases.push_back({bigger ? "det1.cols" : "det0.cols", (bigger ? "det1.cols" : "det0.cols") + at,
                       [shape, k, bigger](Workspace& ws) {
                         auto cols = content(shape.inner);
                         cols.values[k - 1] += 1;
                         auto det = ws.table.content_determinant(content(shape.outer), cols);
                         if (bigger) return compare(det, ws.table.skew_schur(SkewShape(shape.outer, *bigger)));
                         return compare(det, MultiPoly(shape.nvars()));
                       }});
    }
  });
}

inline void add_oracle_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  for (int n = 1; n <= cfg.max_nvars; ++n) {
    for (const auto& lambda : partitions(static_cast<std::size_t>(n), cfg.max_size)) {
      for (const auto& mu : subpartitions(lambda)) {
        SkewShape shape(lambda, mu);
        cases.push_back({"oracle_equiv", "oracle_equiv N=" + std::to_string(n) + " " + to_string(shape),
                         [shape](Workspace& ws) {
                           return compare(ws.table.skew_schur(shape), ssyt_skew_schur(shape));
                         }});
      }
    }
  }
}

inline void add_weigandt_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  for (int n = 1; n <= cfg.max_nvars; ++n) {
    for (const auto& lambda : partitions(static_cast<std::size_t>(n), cfg.max_size)) {
      SkewShape shape(lambda, Partition::zero(lambda.nvars()));
      cases.push_back({"weigandt", "weigandt N=" + std::to_string(n) + " " + to_string(lambda),
                       [shape, n](Workspace& ws) {
                         auto rep = check_theorem1(shape, n, -1, ws.table);
                         if (!rep.verdict) return CaseResult{false, to_text(rep.lhs), to_text(rep.rhs)};
                         if (!inner_sum_vanishes(rep, ws.table)) {
                           return CaseResult{false, "inner sum", "nonzero"};
                         }
                         return CaseResult{};
                       }});
    }
  }
}

inline void add_theorem3_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  const QPoly q = QPoly::q();
  const std::pair<QPoly, QPoly> ab[] = {{0, q - 1}, {q - 1, 0}, {q, -1}};
  for (const auto& lambda : partitions(static_cast<std::size_t>(cfg.max_nvars), cfg.max_size)) {
    for (const auto& mu : subpartitions(lambda)) {
      for (const auto& [a, b] : ab) {
        cases.push_back({"theorem3",
                         "theorem3 " + to_string(lambda) + "/" + to_string(mu) + " a=" + to_text(a) +
                             " b=" + to_text(b),
                         [lambda, mu, a = a, b = b](Workspace&) {
                           auto rep = check_theorem3(lambda, mu, a, b);
                           if (rep.verdict) return CaseResult{};
                           return CaseResult{false, to_text(rep.lhs), to_text(rep.rhs)};
                         }});
      }
    }
  }
}

// Random instances are drawn here, in enumeration order, so reports depend
// only on the seed.
inline void add_commutation_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  Rng rng(cfg.seed);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const LambdaElement u = random_lambda(rng);
    for (int n = 1; n <= cfg.max_nvars; ++n) {
      const auto nv = static_cast<std::size_t>(n);
      cases.push_back({"nabla_q_commutation",
                       "nabla_q_commutation N=" + std::to_string(n) + " u=" + to_text(u),
                       [u, nv](Workspace& ws) {
                         return compare(specialize(nabla_q(u), nv, ws.table),
                                        nabla(specialize(u, nv, ws.table)));
                       }});
    }
  }
}

inline void add_backend_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  Rng rng(cfg.seed);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const auto size = static_cast<std::size_t>(uniform(rng, 1, std::min(cfg.max_nvars, 6)));
    const auto nvars = static_cast<std::size_t>(uniform(rng, 1, 3));
    Matrix<MultiPoly> m(size);
    for (auto& row : m)
      for (std::size_t j = 0; j < size; ++j) row.push_back(random_multipoly(rng, nvars, 2));
    std::string desc = "det_backends size=" + std::to_string(size) + " [";
    for (std::size_t i = 0; i < size; ++i) {
      desc += i ? "; " : "";
      for (std::size_t j = 0; j < size; ++j) desc += (j ? ", " : "") + to_text(m[i][j]);
    }
    desc += "]";
    cases.push_back({"det_backends", std::move(desc), [m, nvars](Workspace&) {
                       return compare(det_poly(m, nvars, DetBackend::bareiss),
                                      det_poly(m, nvars, DetBackend::leibniz));
                     }});
  }
}

inline void add_leibniz_cases(const SweepConfig& cfg, std::vector<SweepCase>& cases) {
  Rng rng(cfg.seed);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const auto count = static_cast<std::size_t>(uniform(rng, 2, 5));
    const auto nvars = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<MultiPoly> factors;
    std::string desc = "leibniz";
    for (std::size_t k = 0; k < count; ++k) {
      factors.push_back(random_multipoly(rng, nvars, 2));
      desc += " (" + to_text(factors.back()) + ")";
    }
    cases.push_back({"leibniz", std::move(desc), [factors, nvars](Workspace&) {
                       MultiPoly product = MultiPoly::one(nvars);
                       for (const auto& f : factors) product = product * f;
                       MultiPoly expanded(nvars);
                       for (std::size_t k = 0; k < factors.size(); ++k) {
                         MultiPoly t = MultiPoly::one(nvars);
                         for (std::size_t j = 0; j < factors.size(); ++j) t = t * (j == k ? nabla(factors[j]) : factors[j]);
                         expanded += t;
                       }
                       return compare(nabla(product), expanded);
                     }});
  }
}

inline std::vector<SweepCase> enumerate_cases(const SweepConfig& cfg) {
  std::vector<SweepCase> cases;
  switch (cfg.identity) {
    case Identity::theorem1: add_theorem1_cases(cfg, cases); break;
    case Identity::corollary2: add_corollary2_cases(cfg, cases); break;
    case Identity::lemma_nabla_h: add_nabla_h_cases(cfg, cases); break;
    case Identity::det_lemmas: add_det_lemma_cases(cfg, cases); break;
    case Identity::theorem3: add_theorem3_cases(cfg, cases); break;
    case Identity::oracle_equiv: add_oracle_cases(cfg, cases); break;
    case Identity::weigandt: add_weigandt_cases(cfg, cases); break;
    case Identity::nabla_q_commutation: add_commutation_cases(cfg, cases); break;
    case Identity::det_backends: add_backend_cases(cfg, cases); break;
    case Identity::leibniz: add_leibniz_cases(cfg, cases); break;
  }
  return cases;
}

/// Runs prepared cases; results are merged in enumeration order.
inline SweepReport run_cases(const SweepConfig& cfg, const std::vector<SweepCase>& cases,
                             std::chrono::steady_clock::time_point start) {
  std::vector<CaseResult> results(cases.size());

  SweepReport report;
  report.config = cfg;
  if (cfg.fail_fast) {
    Workspace ws;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      results[i] = cases[i].run(ws);
      ++report.cases_run;
      ++report.cases_by_kind[cases[i].kind];
      if (!results[i].ok) {
        report.failures.push_back({cases[i].description, results[i].lhs, results[i].rhs});
        break;
      }
    }
  } else {
    unsigned workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, cases.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      Workspace ws;
      for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) results[i] = cases[i].run(ws);
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (std::size_t i = 0; i < cases.size(); ++i) {
      ++report.cases_run;
      ++report.cases_by_kind[cases[i].kind];
      if (!results[i].ok) report.failures.push_back({cases[i].description, results[i].lhs, results[i].rhs});
    }
  }
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace detail

inline SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  return detail::run_cases(cfg, detail::enumerate_cases(cfg), start);
}

inline json to_json(const SweepReport& r) {
  json a_values = json::array();
  for (const auto& a : r.config.a_values) a_values.push_back(a.str());
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"case", f.description}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"identity", std::string(to_string(r.config.identity))},
          {"config",
           {{"max_nvars", r.config.max_nvars},
            {"max_size", r.config.max_size},
            {"a_values", std::move(a_values)},
            {"seed", r.config.seed},
            {"samples", r.config.samples},
            {"fail_fast", r.config.fail_fast}}},
          {"cases_run", r.cases_run},
          {"cases_by_kind", r.cases_by_kind},
          {"failures", std::move(failures)},
          {"wall_time_s", r.wall_time_s}};
}

inline std::string to_text(const SweepReport& r) {
  std::string s = std::string(to_string(r.config.identity)) + ": " + std::to_string(r.cases_run) + " cases, " +
                  std::to_string(r.failures.size()) + " failures";
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.3f s\n", r.wall_time_s);
  s += buf;
  for (const auto& [kind, n] : r.cases_by_kind) s += "  " + kind + ": " + std::to_string(n) + "\n";
  for (const auto& f : r.failures) s += "FAIL " + f.description + "\n  lhs: " + f.lhs + "\n  rhs: " + f.rhs + "\n";
  return s;
}

}  // namespace skewnabla
