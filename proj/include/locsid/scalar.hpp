#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace locsid {

using Rational = mpq_class;
using BigInt = mpz_class;

template <class T>
inline constexpr bool is_rational_v = std::is_same_v<T, Rational>;

// Values are either exact rationals or doubles; everything numeric in the
// library is templated on one of the two.
template <class T>
concept Scalar = std::is_same_v<T, Rational> || std::is_same_v<T, double>;

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

template <Scalar T>
T from_rational(const Rational& r)
{
  if constexpr (is_rational_v<T>) {
    return r;
  } else {
    return r.get_d();
  }
}

template <Scalar T>
T from_int(long v)
{
  return T(v);
}

inline Rational abs_value(const Rational& x) { return abs(x); }
inline double abs_value(double x) { return std::fabs(x); }

template <Scalar T>
T pow_int(const T& base, unsigned exponent)
{
  T result = T(1);
  T b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

/// 2^-k as an exact rational.
Rational pow2_neg(unsigned k);

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rational& x);

/// Shortest round-trip decimal form.
std::string to_string(double x);

/// Parses "p/q", "p", or a plain decimal such as "-0.125" or "1e-3".
/// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// Exact rational value of a finite double.
Rational rational_from_double(double x);

}  // namespace locsid
