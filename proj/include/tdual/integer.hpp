#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace tdual {

/// Arbitrary-precision signed integer used for every exact computation.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// gcd with gcd(a, 0) = |a|.
inline Integer gcd_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a) / gcd_int(a, b) * abs_int(b);
}

/// Least nonnegative residue of x modulo m (m >= 1).
inline Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

inline std::optional<std::int64_t> to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(x);
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace tdual
