#pragma once

// Exact integers and rationals used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "rackqm/error.hpp"

namespace rackqm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Integer& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

inline Rational abs(const Rational& v) { return v.sign() < 0 ? Rational(-v) : v; }

/// Serializes as "p/q" with q > 0, also for integral values.
inline std::string to_string(const Rational& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

/// Human form: "p" when the denominator is 1, else "p/q".
inline std::string to_display(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return to_string(v);
}

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

inline Integer parse_integer_unchecked(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace detail

inline Integer parse_integer(std::string_view s) {
  if (!detail::is_decimal_integer(s)) {
    throw parse_error("malformed integer '" + std::string(s) + "'", 0);
  }
  return detail::parse_integer_unchecked(s);
}

/// Accepts "p" or "p/q" with q nonzero.
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  auto num = s.substr(0, slash);
  auto den = s.substr(slash + 1);
  if (!detail::is_decimal_integer(num) || !detail::is_decimal_integer(den)) {
    throw parse_error("malformed rational '" + std::string(s) + "'", 0);
  }
  Integer d = detail::parse_integer_unchecked(den);
  if (d == 0) throw parse_error("zero denominator in '" + std::string(s) + "'", slash + 1);
  return Rational(detail::parse_integer_unchecked(num), d);
}

}  // namespace rackqm
