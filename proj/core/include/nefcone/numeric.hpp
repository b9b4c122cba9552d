#pragma once

// Exact integer and rational arithmetic used throughout the library.
// Nothing in here touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace nefcone {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Floor division rounding toward negative infinity; `den` must be nonzero.
Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Largest r with r*r <= v. Throws std::domain_error for negative v.
Integer isqrt(const Integer& v);
bool is_perfect_square(const Integer& v);

/// Narrow to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer& v);

/// "P/Q", "-P/Q" or an integer literal. Decimals and exponents are rejected
/// with std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& v);

/// Decimal rendering of q rounded half-up to `places` digits, computed exactly.
std::string to_decimal(const Rational& q, int places = 6);

}  // namespace nefcone
