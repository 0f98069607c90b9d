#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kw {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Rejects decimals, exponents and zero denominators.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1) with the sign on the numerator.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

bool is_integer(const Rational& q);
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Integer square root of a nonnegative integer.
BigInt isqrt(const BigInt& x);
std::int64_t isqrt64(std::int64_t x);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace kw
