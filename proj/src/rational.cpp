#include "scw/rational.hpp"

#include <cctype>

namespace scw {

std::optional<Rational> Rational::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  auto parse_int = [](const std::string& s) -> std::optional<BigInt> {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    }
    return BigInt(s);
  };
  if (slash == std::string::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(std::move(*n));
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(std::move(*n), std::move(*d));
}

Rational harmonic(unsigned n) {
  if (n == 0) throw std::domain_error("harmonic: n must be >= 1");
  Rational h;
  for (unsigned i = 1; i <= n; ++i) h += Rational(BigInt(1), BigInt(i));
  return h;
}

}  // namespace scw
