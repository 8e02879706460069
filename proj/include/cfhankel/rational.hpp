#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace cfh {

/// Arbitrary-precision integer and rational. Expression templates are off so
/// the types behave as plain values inside Eigen and generic code.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// num/den in lowest terms with a positive denominator, for any sign of den.
/// Throws Error(ZeroCoefficient) when den is zero.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q" with q omitted when it is 1; the denominator is always positive.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q" (optional surrounding whitespace). Throws
/// Error(ParseError) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::optional<Rational> try_divide(const Rational& num, const Rational& den) {
  if (den.is_zero()) return std::nullopt;
  return num / den;
}

inline std::optional<Rational> as_rational(const Rational& r) { return r; }

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// r^e for any integer e; e < 0 requires r != 0.
Rational pow(const Rational& r, long long e);

}  // namespace cfh
