// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <string>

#include "skewnabla/skewnabla.hpp"

using namespace skewnabla;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

SweepReport run(Identity id, int nvars, int size, std::size_t samples = 200) {
  SweepConfig cfg;
  cfg.identity = id;
  cfg.max_nvars = nvars;
  cfg.max_size = size;
  cfg.samples = samples;
  cfg.seed = 2024;
  cfg.threads = 0;
  if (id == Identity::theorem1) cfg.a_values = default_a_values();
  return run_sweep(cfg);
}

Outcome summarize(const SweepReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu cases, %zu failures, %.2f s", r.cases_run, r.failures.size(), r.wall_time_s);
  std::string detail = buf;
  if (!r.passed()) detail += "; first: " + r.failures.front().description;
  return {r.passed() && r.cases_run > 0, detail};
}

Outcome sweep(Identity id, int nvars, int size, std::size_t samples = 200) {
  return summarize(run(id, nvars, size, samples));
}

Outcome worked_example() {
  const SkewShape shape({3, 2, 1}, {1, 1, 0});
  SchurTable table;
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{2, 0}, {3, -1}, {0, 2}}) {
    const auto rep = check_theorem1(shape, a, b, table);
    if (!rep.verdict) return {false, "verdict false at a=" + std::to_string(a)};
    if (rep.outer_terms.size() != 3) return {false, "outer term count"};
    const std::int64_t outer[] = {2 + a, 0 + a, -2 + a};
    for (std::size_t i = 0; i < 3; ++i) {
      if (rep.outer_terms[i].index != i + 1 || rep.outer_terms[i].coefficient != outer[i]) {
        return {false, "outer coefficient " + std::to_string(i + 1)};
      }
    }
    if (rep.inner_terms.size() != 2 || rep.inner_terms[0].index != 1 || rep.inner_terms[1].index != 3) {
      return {false, "inner terms are not i=1, i=3"};
    }
    if (rep.inner_terms[0].coefficient != b - 0 || rep.inner_terms[1].coefficient != b + 3) {
      return {false, "inner coefficients"};
    }
  }
  return {true, "(a,b) in {(2,0),(3,-1),(0,2)}; no i=2 inner term"};
}

Outcome laplacian_term() {
  const auto e = expand_schur_basis(nabla_prime(skew_schur(SkewShape({5, 3, 0}, {0, 0, 0}))));
  const Partition p{2, 2, 2};
  const bool ok = e.contains(p) && e.at(p) == 2;
  return {ok, to_text(e)};
}

Outcome det_lemmas() {
  const auto rep = run(Identity::det_lemmas, 3, 6);
  auto r = summarize(rep);
  for (const char* kind : {"det.s", "det1.rows", "det1.cols", "det0.rows", "det0.cols"}) {
    const auto it = rep.cases_by_kind.find(kind);
    const std::size_t n = it == rep.cases_by_kind.end() ? 0 : it->second;
    r.detail += std::string("; ") + kind + "=" + std::to_string(n);
    if (n == 0) r.ok = false;
  }
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"nabla(h_n) = (n+N-1) h_(n-1), n in -2..10, N in 0..5",
       [] { return sweep(Identity::lemma_nabla_h, 5, 10); }},
      {"corner-sum formula for nabla(s_lambda/mu), N <= 4, |lambda| <= 8, five a values",
       [] { return sweep(Identity::theorem1, 4, 8); }},
      {"uncoefficiented corner sums agree, N <= 4, |lambda| <= 8",
       [] { return sweep(Identity::corollary2, 4, 8); }},
      {"mu = 0, a = N, b = -1: inner sum vanishes, N <= 4, |lambda| <= 8",
       [] { return sweep(Identity::weigandt, 4, 8); }},
      {"worked example (3,2,1)/(1,1,0) at N = 3", worked_example},
      {"determinant lemmas det.s, det1/det0 rows and columns, N <= 3, |lambda| <= 6", det_lemmas},
      {"Jacobi-Trudi equals tableau enumeration, N <= 4, |lambda| <= 8",
       [] { return sweep(Identity::oracle_equiv, 4, 8); }},
      {"sum of second derivatives of s_(5,3,0) at N = 3 contains 2*s(2,2,2)", laplacian_term},
      {"nabla_q corner-sum formula, length <= 3, |lambda| <= 6, three (a,b)",
       [] { return sweep(Identity::theorem3, 3, 6); }},
      {"specialization commutes with nabla_q, 200 random elements, N in 1..4",
       [] { return sweep(Identity::nabla_q_commutation, 4, 1, 200); }},
      {"Bareiss equals Leibniz, 100 random matrices of size <= 4",
       [] { return sweep(Identity::det_backends, 4, 1, 100); }},
      {"multi-factor Leibniz rule for nabla, 200 random tuples of <= 5 factors",
       [] { return sweep(Identity::leibniz, 3, 1, 200); }},
  };

  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("%s %2d %s [%s]\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
