#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace acyt {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) as long as inputs are canonical, which the helpers below enforce.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Strict parser for "p" or "p/q" with decimal digits and an optional leading
/// minus. Decimal points and exponents are rejected; *why carries the reason.
inline std::optional<Rational> parse_rational(const std::string& s, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) -> std::optional<Rational> {
    if (why) *why = m;
    return std::nullopt;
  };
  if (s.empty()) return fail("empty coefficient");
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos)
    return fail("floating point not accepted");
  std::size_t i = 0;
  if (s[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == num_begin) return fail("malformed rational \"" + s + "\"");
  std::string den;
  if (i < s.size()) {
    if (s[i] != '/') return fail("malformed rational \"" + s + "\"");
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == den_begin || i != s.size()) return fail("malformed rational \"" + s + "\"");
    den = s.substr(den_begin);
    bool all_zero = den.find_first_not_of('0') == std::string::npos;
    if (all_zero) return fail("zero denominator");
  }
  if (i != s.size()) return fail("malformed rational \"" + s + "\"");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) return fail("malformed rational \"" + s + "\"");
  r.canonicalize();
  return r;
}

}  // namespace acyt
