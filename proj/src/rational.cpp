#include "fdg3/rational.hpp"

#include <charconv>
#include <cstdlib>

namespace fdg3 {

namespace {

int64_t parse_int(const std::string& s) {
  int64_t out = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || p != s.data() + s.size())
    throw UsageError("bad rational component '" + s + "'");
  return out;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw UsageError("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos)
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));

  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text), 1);

  // Plain decimal literal, parsed exactly: "0.33" -> 33/100.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  size_t frac_len = text.size() - dot - 1;
  if (frac_len == 0 || frac_len > 17) throw UsageError("bad decimal rational '" + text + "'");
  int64_t den = 1;
  for (size_t i = 0; i < frac_len; ++i) {
    if (den > (INT64_MAX / 10)) throw UsageError("decimal rational out of range: '" + text + "'");
    den *= 10;
  }
  return Rational(parse_int(digits), den);
}

}  // namespace fdg3
