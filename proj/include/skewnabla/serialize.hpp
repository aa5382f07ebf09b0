#pragma once

// Canonical text and JSON forms. Text output is accepted back by the parse_*
// functions; JSON coefficients are decimal strings so no precision is lost.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewnabla/error.hpp"
#include "skewnabla/expression.hpp"
#include "skewnabla/lambda.hpp"
#include "skewnabla/nabla.hpp"
#include "skewnabla/ring.hpp"
#include "skewnabla/shapes.hpp"
#include "skewnabla/symfunc.hpp"

namespace skewnabla {

using json = nlohmann::json;

namespace detail {

// Appends "c*mono" with sign handling; an empty monomial is a constant.
inline void append_signed(std::string& out, const Integer& c, const std::string& mono) {
  const bool negative = c < 0;
  const Integer mag = negative ? Integer(-c) : c;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.str();
  } else if (mag == 1) {
    out += mono;
  } else {
    out += mag.str() + "*" + mono;
  }
}

inline std::string monomial_text(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

inline std::string q_power_text(std::size_t k) {
  if (k == 0) return "";
  return k == 1 ? "q" : "q^" + std::to_string(k);
}

inline std::string hmonomial_text(const HMonomial& m) {
  std::string s;
  for (auto v : m) {
    if (!s.empty()) s += '*';
    s += "h" + std::to_string(v);
  }
  return s;
}

inline Integer integer_from_json(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw ParseError("bad decimal coefficient '" + s + "'");
    }
    return Integer(s);
  }
  if (j.is_number_integer()) return Integer(j.get<long long>());
  throw ParseError("coefficient must be a decimal string");
}

}  // namespace detail

// ---- MultiPoly -------------------------------------------------------------

/// "x1^2*x2 - 3*x1 + 5"; the zero polynomial is "0".
inline std::string to_text(const MultiPoly& p) {
  std::string out;
  for (const auto& [e, c] : p.terms()) detail::append_signed(out, c, detail::monomial_text(e));
  return out.empty() ? "0" : out;
}

inline MultiPoly parse_multipoly(std::string_view text, std::size_t nvars) {
  ExpressionParser<MultiPoly> parser(
      [nvars](std::string_view name) -> std::optional<MultiPoly> {
        if (name.size() < 2 || name[0] != 'x') return std::nullopt;
        std::size_t k = 0;
        for (char ch : name.substr(1)) {
          if (ch < '0' || ch > '9') return std::nullopt;
          k = k * 10 + static_cast<std::size_t>(ch - '0');
          if (k > nvars) return std::nullopt;
        }
        if (k < 1) return std::nullopt;
        return MultiPoly::variable(nvars, k);
      },
      [nvars](const Integer& c) { return MultiPoly::constant(nvars, c); });
  return parser.parse(text);
}

inline json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exp", std::vector<std::uint32_t>(e.begin(), e.end())}, {"coeff", c.str()}});
  }
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline MultiPoly multipoly_from_json(const json& j) {
  try {
    const auto nvars = j.at("nvars").get<std::size_t>();
    MultiPoly p(nvars);
    for (const auto& t : j.at("terms")) {
      const auto exp = t.at("exp").get<std::vector<std::uint32_t>>();
      if (exp.size() != nvars) throw ParseError("exponent length differs from nvars");
      p.add_term(Exponent(exp.begin(), exp.end()), detail::integer_from_json(t.at("coeff")));
    }
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

// ---- QPoly -----------------------------------------------------------------

/// "q^2 - q + 1"; zero is "0".
inline std::string to_text(const QPoly& p) {
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    if (p.coeffs()[k] != 0) detail::append_signed(out, p.coeffs()[k], detail::q_power_text(k));
  }
  return out.empty() ? "0" : out;
}

inline QPoly parse_qpoly(std::string_view text) {
  ExpressionParser<QPoly> parser(
      [](std::string_view name) -> std::optional<QPoly> {
        if (name == "q") return QPoly::q();
        return std::nullopt;
      },
      [](const Integer& c) { return QPoly(c); });
  return parser.parse(text);
}

inline json to_json(const QPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

inline QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("q-polynomial JSON must be an array of coefficients");
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(detail::integer_from_json(c));
  return QPoly(std::move(coeffs));
}

// ---- LambdaElement ---------------------------------------------------------

/// "(q + 1)*h1*h1 + q*h2 - 1"; zero is "0".
inline std::string to_text(const LambdaElement& u) {
  std::string out;
  for (const auto& [mono, coef] : u.terms()) {
    const std::string hs = detail::hmonomial_text(mono);
    std::size_t nonzero = 0, k0 = 0;
    for (std::size_t k = 0; k < coef.coeffs().size(); ++k) {
      if (coef.coeffs()[k] != 0) {
        ++nonzero;
        k0 = k;
      }
    }
    if (nonzero == 1) {
      std::string mono_text = detail::q_power_text(k0);
      if (!hs.empty()) mono_text += (mono_text.empty() ? "" : "*") + hs;
      detail::append_signed(out, coef.coeffs()[k0], mono_text);
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + to_text(coef) + ")";
      if (!hs.empty()) out += "*" + hs;
    }
  }
  return out.empty() ? "0" : out;
}

inline LambdaElement parse_lambda(std::string_view text) {
  ExpressionParser<LambdaElement> parser(
      [](std::string_view name) -> std::optional<LambdaElement> {
        if (name == "q") return LambdaElement::scalar(QPoly::q());
        if (name.size() < 2 || name[0] != 'h') return std::nullopt;
        int n = 0;
        for (char ch : name.substr(1)) {
          if (ch < '0' || ch > '9') return std::nullopt;
          n = n * 10 + (ch - '0');
        }
        return LambdaElement::generator(n);
      },
      [](const Integer& c) { return LambdaElement::scalar(QPoly(c)); });
  return parser.parse(text);
}

inline json to_json(const LambdaElement& u) {
  json terms = json::array();
  for (const auto& [mono, coef] : u.terms()) terms.push_back({{"h", mono}, {"coeff", to_json(coef)}});
  return {{"terms", std::move(terms)}};
}

inline LambdaElement lambda_from_json(const json& j) {
  try {
    LambdaElement u;
    for (const auto& t : j.at("terms")) {
      auto parts = t.at("h").get<std::vector<int>>();
      u += LambdaElement::term(std::move(parts), qpoly_from_json(t.at("coeff")));
    }
    return u;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed symmetric function JSON: ") + e.what());
  }
}

// ---- partitions and Schur expansions ---------------------------------------

inline json to_json(const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); }

/// "2*s(2,2,2) - s(3,2,1)"; zero is "0".
inline std::string to_text(const SchurExpansion& e) {
  std::string out;
  for (const auto& [lambda, c] : e) detail::append_signed(out, c, "s" + to_string(lambda));
  return out.empty() ? "0" : out;
}

inline json to_json(const SchurExpansion& e) {
  json terms = json::array();
  for (const auto& [lambda, c] : e) terms.push_back({{"partition", to_json(lambda)}, {"coeff", c.str()}});
  return {{"terms", std::move(terms)}};
}

inline SchurExpansion schur_expansion_from_json(const json& j) {
  try {
    SchurExpansion e;
    for (const auto& t : j.at("terms")) {
      Integer c = detail::integer_from_json(t.at("coeff"));
      if (c != 0) e.emplace(Partition(t.at("partition").get<std::vector<int>>()), std::move(c));
    }
    return e;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed Schur expansion JSON: ") + ex.what());
  }
}

// ---- reports ---------------------------------------------------------------

inline json to_json(const SkewShape& s) {
  return {{"nvars", s.nvars()}, {"outer", to_json(s.outer)}, {"inner", to_json(s.inner)}};
}

inline json to_json(const CornerTerm& t) {
  return {{"index", t.index}, {"coeff", t.coefficient.str()}, {"partition", to_json(t.part)}};
}

inline json to_json(const Theorem1Report& r) {
  json outer = json::array(), inner = json::array();
  for (const auto& t : r.outer_terms) outer.push_back(to_json(t));
  for (const auto& t : r.inner_terms) inner.push_back(to_json(t));
  return {{"shape", to_json(r.shape)}, {"a", r.a},          {"b", r.b},
          {"lhs", to_json(r.lhs)},     {"rhs", to_json(r.rhs)}, {"outer_terms", std::move(outer)},
          {"inner_terms", std::move(inner)}, {"verdict", r.verdict}};
}

inline std::string to_text(const Theorem1Report& r) {
  std::string s = "shape    " + to_string(r.shape) + "  N=" + std::to_string(r.shape.nvars()) +
                  "  a=" + std::to_string(r.a) + "  b=" + std::to_string(r.b) + "\n";
  for (const auto& t : r.outer_terms) {
    s += "outer    i=" + std::to_string(t.index) + "  coeff " + t.coefficient.str() + "  s" +
         to_string(t.part) + "/" + to_string(r.shape.inner) + "\n";
  }
  for (const auto& t : r.inner_terms) {
    s += "inner    i=" + std::to_string(t.index) + "  coeff " + t.coefficient.str() + "  s" +
         to_string(r.shape.outer) + "/" + to_string(t.part) + "\n";
  }
  s += "lhs      " + to_text(r.lhs) + "\n";
  s += "rhs      " + to_text(r.rhs) + "\n";
  s += std::string("verdict  ") + (r.verdict ? "true" : "false") + "\n";
  return s;
}

inline json to_json(const LambdaCornerTerm& t) {
  return {{"index", t.index}, {"coeff", to_json(t.coefficient)}, {"partition", to_json(t.part)}};
}

inline json to_json(const Theorem3Report& r) {
  json outer = json::array(), inner = json::array();
  for (const auto& t : r.outer_terms) outer.push_back(to_json(t));
  for (const auto& t : r.inner_terms) inner.push_back(to_json(t));
  return {{"outer", to_json(r.outer)},     {"inner", to_json(r.inner)},
          {"a", to_json(r.a)},             {"b", to_json(r.b)},
          {"lhs", to_json(r.lhs)},         {"rhs", to_json(r.rhs)},
          {"outer_terms", std::move(outer)}, {"inner_terms", std::move(inner)},
          {"verdict", r.verdict}};
}

inline std::string to_text(const Theorem3Report& r) {
  std::string s = "shape    " + to_string(r.outer) + "/" + to_string(r.inner) + "  a=" + to_text(r.a) +
                  "  b=" + to_text(r.b) + "\n";
  for (const auto& t : r.outer_terms) {
    s += "outer    i=" + std::to_string(t.index) + "  coeff " + to_text(t.coefficient) + "  s" +
         to_string(t.part) + "/" + to_string(r.inner) + "\n";
  }
  for (const auto& t : r.inner_terms) {
    s += "inner    i=" + std::to_string(t.index) + "  coeff " + to_text(t.coefficient) + "  s" +
         to_string(r.outer) + "/" + to_string(t.part) + "\n";
  }
  s += "lhs      " + to_text(r.lhs) + "\n";
  s += "rhs      " + to_text(r.rhs) + "\n";
  s += std::string("verdict  ") + (r.verdict ? "true" : "false") + "\n";
  return s;
}

}  // namespace skewnabla
