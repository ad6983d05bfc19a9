#ifndef BOOKX_RATIONAL_HPP
#define BOOKX_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bookx {

using BigInt = boost::multiprecision::cpp_int;
/// Canonical reduced fraction with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(const BigInt& num, const BigInt& den);

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);
bool is_integer(const Rational& x);

/// Converts an integral rational to int64, throwing std::domain_error otherwise.
std::int64_t to_int64(const Rational& x);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

enum class Rounding { Truncate, HalfEven };

/// Scientific notation with `digits` significant digits, e.g. "3.4342e-3".
std::string to_scientific(const Rational& x, int digits, Rounding mode);
/// Fixed notation with `decimals` digits after the point.
std::string to_fixed(const Rational& x, int decimals, Rounding mode);

std::int64_t binomial(std::int64_t n, std::int64_t k);
BigInt big_binomial(std::int64_t n, std::int64_t k);

/// Largest s with s*s <= v.
std::uint64_t isqrt(std::uint64_t v);

}  // namespace bookx

#endif  // BOOKX_RATIONAL_HPP
