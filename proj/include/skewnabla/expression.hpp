#pragma once

// Recursive-descent parser for ring expressions built from integer literals,
// identifiers, + - * ^ and parentheses. The ring supplies identifier lookup
// and the embedding of integers.

#include <cctype>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "skewnabla/error.hpp"
#include "skewnabla/ring.hpp"

namespace skewnabla {

template <class Ring>
class ExpressionParser {
 public:
  using Resolver = std::function<std::optional<Ring>(std::string_view)>;
  using Embed = std::function<Ring(const Integer&)>;

  ExpressionParser(Resolver resolve, Embed embed)
      : resolve_(std::move(resolve)), embed_(std::move(embed)) {}

  Ring parse(std::string_view text) const {
    Cursor cur{text, 0};
    Ring value = expr(cur);
    cur.skip_space();
    if (!cur.done()) fail(cur, "unexpected character");
    return value;
  }

 private:
  struct Cursor {
    std::string_view text;
    std::size_t pos;

    void skip_space() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() {
      skip_space();
      return done() ? '\0' : text[pos];
    }
    bool accept(char c) {
      if (peek() != c) return false;
      ++pos;
      return true;
    }
  };

  [[noreturn]] static void fail(const Cursor& cur, const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(cur.pos) + " in '" +
                     std::string(cur.text) + "'");
  }

  // expr := ['+'|'-'] term { ('+'|'-') term }
  Ring expr(Cursor& cur) const {
    bool negate = false;
    if (cur.accept('-')) {
      negate = true;
    } else {
      cur.accept('+');
    }
    Ring value = term(cur);
    if (negate) value = -value;
    for (;;) {
      if (cur.accept('+')) {
        value = value + term(cur);
      } else if (cur.accept('-')) {
        value = value - term(cur);
      } else {
        return value;
      }
    }
  }

  // term := power { '*' power }
  Ring term(Cursor& cur) const {
    Ring value = power(cur);
    while (cur.accept('*')) value = value * power(cur);
    return value;
  }

  // power := primary [ '^' natural ]
  Ring power(Cursor& cur) const {
    Ring base = primary(cur);
    if (!cur.accept('^')) return base;
    cur.skip_space();
    const std::string digits = take_digits(cur);
    if (digits.empty()) fail(cur, "expected exponent");
    const unsigned long e = std::stoul(digits);
    Ring value = embed_(1);
    for (unsigned long k = 0; k < e; ++k) value = value * base;
    return value;
  }

  // primary := natural | identifier | '(' expr ')'
  Ring primary(Cursor& cur) const {
    const char c = cur.peek();
    if (c == '(') {
      ++cur.pos;
      Ring value = expr(cur);
      if (!cur.accept(')')) fail(cur, "expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return embed_(Integer(take_digits(cur)));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = cur.pos;
      while (cur.pos < cur.text.size() &&
             (std::isalnum(static_cast<unsigned char>(cur.text[cur.pos])) || cur.text[cur.pos] == '_')) {
        ++cur.pos;
      }
      const auto name = cur.text.substr(start, cur.pos - start);
      if (auto v = resolve_(name)) return *v;
      cur.pos = start;
      fail(cur, "unknown identifier '" + std::string(name) + "'");
    }
    fail(cur, c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  static std::string take_digits(Cursor& cur) {
    const std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) ++cur.pos;
    return std::string(cur.text.substr(start, cur.pos - start));
  }

  Resolver resolve_;
  Embed embed_;
};

}  // namespace skewnabla
