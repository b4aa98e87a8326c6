#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plgroup {

// All coordinates and slopes are exact rationals; nothing in the library ever
// rounds. cpp_rational keeps gcd(|num|, den) = 1 and den > 0 after every step.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

inline bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  out = Integer(std::string(s));
  return true;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  Integer num, den = 1;
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_integer(s, num);
  } else {
    ok = parse_integer(s.substr(0, slash), num) &&
         parse_integer(s.substr(slash + 1), den) && den != 0;
  }
  if (!ok) throw std::invalid_argument("bad rational: '" + std::string(s) + "'");
  return Rational(num, den);
}

/// "p/q", or plain "p" when the denominator is 1.
inline std::string rat_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

/// Always "p/q", including "p/1".
inline std::string rat_frac_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_power_of_two(Integer n) {
  if (n < 1) return false;
  while (n % 2 == 0) n /= 2;
  return n == 1;
}

/// r = 2^k for some integer k (so 1, 2, 4, ... or 1/2, 1/4, ...).
inline bool is_pow2_rational(const Rational& r) {
  if (r <= 0) return false;
  return (denominator(r) == 1 && is_power_of_two(numerator(r))) ||
         (numerator(r) == 1 && is_power_of_two(denominator(r)));
}

/// Denominator is a power of two (1 counts).
inline bool is_dyadic(const Rational& r) { return is_power_of_two(denominator(r)); }

struct iteration_limit_error : std::runtime_error {
  explicit iteration_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Cap for every minimal-power search; PLGROUP_MAX_ITER overrides the default.
inline long iteration_cap() {
  static const long cap = [] {
    if (const char* env = std::getenv("PLGROUP_MAX_ITER")) {
      long v = std::atol(env);
      if (v > 0) return v;
    }
    return 1000000L;
  }();
  return cap;
}

}  // namespace plgroup
