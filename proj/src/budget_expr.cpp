#include "scw/budget_expr.hpp"

#include <cctype>
#include <stdexcept>

namespace scw {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  long long n, m, k;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("budget expression '" + text + "': " + why);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  __int128 checked(__int128 v) const {
    const __int128 limit = static_cast<__int128>(1) << 62;
    if (v >= limit || v <= -limit) fail("intermediate value overflows");
    return v;
  }

  __int128 expr() {
    __int128 v = term();
    while (true) {
      if (eat('+')) {
        v = checked(v + term());
      } else if (eat('-')) {
        v = checked(v - term());
      } else {
        return v;
      }
    }
  }

  __int128 term() {
    __int128 v = factor();
    while (eat('*')) v = checked(v * factor());
    return v;
  }

  __int128 factor() {
    __int128 base = primary();
    if (!eat('^')) return base;
    __int128 exp = primary();
    if (exp < 0) fail("negative exponent");
    __int128 v = 1;
    for (__int128 i = 0; i < exp; ++i) v = checked(v * base);
    return v;
  }

  __int128 primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      __int128 v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      __int128 v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = checked(v * 10 + (text[pos] - '0'));
        ++pos;
      }
      return v;
    }
    ++pos;
    switch (c) {
      case 'n':
        return n;
      case 'm':
        return m;
      case 'k':
        return k;
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }
};

}  // namespace

std::uint64_t eval_budget_expr(const std::string& expr, long long n, long long m, long long k) {
  Parser p{expr, 0, n, m, k};
  __int128 v = p.expr();
  p.skip_ws();
  if (p.pos != expr.size()) p.fail("trailing input");
  if (v <= 0) p.fail("budget must evaluate to a positive integer");
  return static_cast<std::uint64_t>(v);
}

}  // namespace scw
