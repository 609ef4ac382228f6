#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

// Boost 1.74's mixed rational/integer comparisons recurse forever under
// C++20 rewritten operators; these exact overloads take precedence.
namespace boost {

#define INTERTWINE_RATIONAL_CMP(Int)                                                                         \
  inline bool operator==(const rational<std::int64_t>& a, Int b) { return a == rational<std::int64_t>(b); } \
  inline bool operator!=(const rational<std::int64_t>& a, Int b) { return !(a == b); }                     \
  inline bool operator<(const rational<std::int64_t>& a, Int b) { return a < rational<std::int64_t>(b); }   \
  inline bool operator>(const rational<std::int64_t>& a, Int b) { return a > rational<std::int64_t>(b); }   \
  inline bool operator<=(const rational<std::int64_t>& a, Int b) { return !(a > b); }                      \
  inline bool operator>=(const rational<std::int64_t>& a, Int b) { return !(a < b); }                      \
  inline bool operator==(Int a, const rational<std::int64_t>& b) { return b == a; }                        \
  inline bool operator!=(Int a, const rational<std::int64_t>& b) { return !(b == a); }                     \
  inline bool operator<(Int a, const rational<std::int64_t>& b) { return b > a; }                          \
  inline bool operator>(Int a, const rational<std::int64_t>& b) { return b < a; }                          \
  inline bool operator<=(Int a, const rational<std::int64_t>& b) { return !(b < a); }                      \
  inline bool operator>=(Int a, const rational<std::int64_t>& b) { return !(b > a); }

INTERTWINE_RATIONAL_CMP(int)
INTERTWINE_RATIONAL_CMP(long)
INTERTWINE_RATIONAL_CMP(long long)

#undef INTERTWINE_RATIONAL_CMP

}  // namespace boost

namespace intertwine {

using Rational = boost::rational<std::int64_t>;

/// "a" for integers, "a/b" otherwise (character grammar form).
std::string to_string(const Rational& r);

/// Always "a/b", including integers ("3/1"). Used for JSON output.
std::string to_fraction_string(const Rational& r);

/// Parses "a", "a/b", with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace intertwine
