#pragma once

// Command-line front end. run_cli is separate from main so tests can drive it
// with in-memory streams.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewnabla/skewnabla.hpp"

namespace skewnabla::cli {

enum ExitCode : int { kOk = 0, kIdentityFailed = 1, kUsage = 2, kInternal = 3 };

namespace detail {

struct ShapeArgs {
  std::size_t nvars = 0;
  std::string outer;
  std::string inner;
};

inline void add_shape_options(CLI::App* cmd, ShapeArgs& s, bool with_inner = true) {
  cmd->add_option("--nvars", s.nvars, "number of variables N")->required();
  cmd->add_option("--outer", s.outer, "outer partition, e.g. 3,2,1")->required();
  if (with_inner) cmd->add_option("--inner", s.inner, "inner partition; empty for the zero partition");
}

inline void add_format_option(CLI::App* cmd, std::string& format, const std::string& name = "--format") {
  cmd->add_option(name, format, "output format")->check(CLI::IsMember({"text", "json"}));
}

inline SkewShape make_shape(const ShapeArgs& s) {
  return SkewShape(parse_partition(s.outer, s.nvars), parse_partition(s.inner, s.nvars));
}

inline void emit(std::ostream& out, const std::string& format, const json& j, const std::string& text) {
  if (format == "json") {
    out << j.dump() << "\n";
  } else {
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
  }
}

// Fills whichever of a and b is missing from a + b = total.
template <class T>
std::pair<T, T> complete_ab(const std::optional<T>& a, const std::optional<T>& b, const T& total) {
  if (a && b) return {*a, *b};
  if (a) return {*a, total - *a};
  if (b) return {total - *b, *b};
  throw ParameterError("one of --a or --b is required");
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact skew Schur polynomials and the diagonal derivative"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // h
  int h_n = 0;
  std::size_t h_nvars = 0;
  std::string h_format = "text";
  auto* h_cmd = app.add_subcommand("h", "complete homogeneous polynomial h_n(x1..xN)");
  h_cmd->add_option("--n", h_n, "degree n (may be negative)")->required();
  h_cmd->add_option("--nvars", h_nvars, "number of variables N")->required();
  detail::add_format_option(h_cmd, h_format);

  // schur
  detail::ShapeArgs schur_shape;
  std::string schur_oracle = "jt", schur_format = "text";
  auto* schur_cmd = app.add_subcommand("schur", "skew Schur polynomial s_{outer/inner}");
  detail::add_shape_options(schur_cmd, schur_shape);
  schur_cmd->add_option("--oracle", schur_oracle, "jt (Jacobi-Trudi) or ssyt (tableaux)")
      ->check(CLI::IsMember({"jt", "ssyt"}));
  detail::add_format_option(schur_cmd, schur_format);

  // nabla
  detail::ShapeArgs nabla_shape;
  std::optional<std::int64_t> nabla_a, nabla_b;
  std::string nabla_format = "text";
  auto* nabla_cmd = app.add_subcommand("nabla", "diagonal derivative of s_{outer/inner}; with --a/--b, the corner-sum report");
  detail::add_shape_options(nabla_cmd, nabla_shape);
  nabla_cmd->add_option("--a", nabla_a, "outer-sum offset a");
  nabla_cmd->add_option("--b", nabla_b, "inner-sum offset b (a + b = N - 1)");
  detail::add_format_option(nabla_cmd, nabla_format, "--report,--format");

  // theorem1
  detail::ShapeArgs t1_shape;
  std::optional<std::int64_t> t1_a, t1_b;
  std::string t1_format = "text";
  auto* t1_cmd = app.add_subcommand("theorem1", "check the corner-sum formula for nabla(s_{outer/inner})");
  detail::add_shape_options(t1_cmd, t1_shape);
  t1_cmd->add_option("--a", t1_a, "outer-sum offset a");
  t1_cmd->add_option("--b", t1_b, "inner-sum offset b (a + b = N - 1)");
  detail::add_format_option(t1_cmd, t1_format);

  // laplace
  detail::ShapeArgs lap_shape;
  std::string lap_format = "text";
  auto* lap_cmd = app.add_subcommand("laplace", "Schur expansion of the sum of second derivatives of s_{outer/inner}");
  detail::add_shape_options(lap_cmd, lap_shape);
  detail::add_format_option(lap_cmd, lap_format);

  // expand
  std::size_t exp_nvars = 0;
  std::string exp_poly, exp_format = "text";
  auto* exp_cmd = app.add_subcommand("expand", "Schur expansion of a symmetric polynomial");
  exp_cmd->add_option("--nvars", exp_nvars, "number of variables N")->required();
  exp_cmd->add_option("--poly", exp_poly, "polynomial in x1..xN, e.g. \"x1^2 + x1*x2 + x2^2\"")->required();
  detail::add_format_option(exp_cmd, exp_format);

  // corollary2
  detail::ShapeArgs c2_shape;
  std::string c2_format = "text";
  auto* c2_cmd = app.add_subcommand("corollary2", "both corner sums without coefficients");
  detail::add_shape_options(c2_cmd, c2_shape);
  detail::add_format_option(c2_cmd, c2_format);

  // theorem3
  std::string t3_outer, t3_inner, t3_format = "text";
  std::optional<std::string> t3_a, t3_b;
  std::size_t t3_size = 0;
  auto* t3_cmd = app.add_subcommand("theorem3", "check the corner-sum formula for nabla_q in the h-basis");
  t3_cmd->add_option("--outer", t3_outer, "outer partition")->required();
  t3_cmd->add_option("--inner", t3_inner, "inner partition");
  t3_cmd->add_option("--a", t3_a, "a in Z[q], e.g. \"q-1\"");
  t3_cmd->add_option("--b", t3_b, "b in Z[q] (a + b = q - 1)");
  t3_cmd->add_option("--det-size", t3_size, "Jacobi-Trudi matrix size (0: smallest admissible)");
  detail::add_format_option(t3_cmd, t3_format);

  // verify
  std::string v_identity = "theorem1", v_a, v_format = "text", v_output;
  SweepConfig v_cfg;
  auto* v_cmd = app.add_subcommand("verify", "exhaustive sweep of one identity");
  std::vector<std::string> identity_names;
  for (const auto& [id, name] : kIdentityNames) identity_names.emplace_back(name);
  v_cmd->add_option("--identity", v_identity, "identity to sweep")->check(CLI::IsMember(identity_names));
  v_cmd->add_option("--max-nvars", v_cfg.max_nvars, "largest N (partition length for theorem3)");
  v_cmd->add_option("--max-size", v_cfg.max_size, "largest |lambda| (largest n for lemma_nabla_h)");
  v_cmd->add_option("--a", v_a, "comma-separated a values, N-relative allowed: -2,0,N-1,N,N+2");
  v_cmd->add_option("--seed", v_cfg.seed, "seed for randomized identities");
  v_cmd->add_option("--samples", v_cfg.samples, "random instances for randomized identities");
  v_cmd->add_option("--threads", v_cfg.threads, "worker threads (0: hardware concurrency)");
  v_cmd->add_flag("--fail-fast", v_cfg.fail_fast, "stop at the first failure");
  v_cmd->add_option("--output", v_output, "also write the JSON report to this file");
  detail::add_format_option(v_cmd, v_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  // Inputs are parsed and validated here; computation only starts afterwards.
  try {
    if (*h_cmd) {
      auto p = complete_homogeneous(h_n, h_nvars);
      detail::emit(out, h_format, to_json(p), to_text(p));
    } else if (*schur_cmd) {
      const auto shape = detail::make_shape(schur_shape);
      auto p = schur_oracle == "ssyt" ? ssyt_skew_schur(shape) : skew_schur(shape);
      detail::emit(out, schur_format, to_json(p), to_text(p));
    } else if (*nabla_cmd || *t1_cmd) {
      const bool is_nabla = nabla_cmd->parsed();
      const auto shape = detail::make_shape(is_nabla ? nabla_shape : t1_shape);
      const auto& a = is_nabla ? nabla_a : t1_a;
      const auto& b = is_nabla ? nabla_b : t1_b;
      const auto& format = is_nabla ? nabla_format : t1_format;
      if (is_nabla && !a && !b) {
        auto p = nabla(skew_schur(shape));
        detail::emit(out, format, to_json(p), to_text(p));
        return kOk;
      }
      auto [av, bv] = detail::complete_ab(a, b, static_cast<std::int64_t>(shape.nvars()) - 1);
      skewnabla::detail::check_ab(shape.nvars(), av, bv);
      auto rep = check_theorem1(shape, av, bv);
      detail::emit(out, format, to_json(rep), to_text(rep));
      return rep.verdict ? kOk : kIdentityFailed;
    } else if (*lap_cmd) {
      const auto shape = detail::make_shape(lap_shape);
      SchurTable table;
      auto e = expand_schur_basis(nabla_prime(table.skew_schur(shape)), table);
      detail::emit(out, lap_format, to_json(e), to_text(e));
    } else if (*exp_cmd) {
      const auto p = parse_multipoly(exp_poly, exp_nvars);
      auto e = expand_schur_basis(p);
      detail::emit(out, exp_format, to_json(e), to_text(e));
    } else if (*c2_cmd) {
      const auto shape = detail::make_shape(c2_shape);
      auto [left, right] = corollary2_sides(shape);
      const bool equal = left == right;
      json j = {{"shape", to_json(shape)}, {"left", to_json(left)}, {"right", to_json(right)}, {"equal", equal}};
      std::string text = "left   " + to_text(left) + "\nright  " + to_text(right) + "\nequal  " +
                         (equal ? "true" : "false") + "\n";
      detail::emit(out, c2_format, j, text);
      return equal ? kOk : kIdentityFailed;
    } else if (*t3_cmd) {
      const auto lambda = parse_partition(t3_outer);
      const auto mu = parse_partition(t3_inner);
      std::optional<QPoly> a, b;
      if (t3_a) a = parse_qpoly(*t3_a);
      if (t3_b) b = parse_qpoly(*t3_b);
      if (!a && !b) a = QPoly(0);
      auto [av, bv] = detail::complete_ab(a, b, QPoly{-1, 1});
      if (av + bv != QPoly{-1, 1}) throw ParameterError("a + b must equal q - 1");
      auto rep = check_theorem3(lambda, mu, av, bv, t3_size);
      detail::emit(out, t3_format, to_json(rep), to_text(rep));
      return rep.verdict ? kOk : kIdentityFailed;
    } else if (*v_cmd) {
      v_cfg.identity = parse_identity(v_identity);
      if (!v_a.empty()) {
        std::stringstream ss(v_a);
        for (std::string tok; std::getline(ss, tok, ',');) v_cfg.a_values.push_back(AValue::parse(tok));
      } else if (v_cfg.identity == Identity::theorem1) {
        v_cfg.a_values = default_a_values();
      }
      v_cfg.validate();
      auto report = run_sweep(v_cfg);
      if (!v_output.empty()) {
        std::ofstream file(v_output);
        if (!file) throw Error("cannot write report to '" + v_output + "'");
        file << to_json(report).dump(2) << "\n";
      }
      detail::emit(out, v_format, to_json(report), to_text(report));
      return report.passed() ? kOk : kIdentityFailed;
    }
  } catch (const ExactDivisionError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace skewnabla::cli
