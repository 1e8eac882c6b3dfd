#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pellsg {

/// Arbitrary-precision signed integer. Every semigroup value is held in one.
using Integer = mpz_class;

/// Exact rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

Integer from_u64(std::uint64_t v);

bool fits_u64(const Integer& v);

/// Precondition: fits_u64(v).
std::uint64_t to_u64(const Integer& v);

/// Parses an optionally signed decimal literal; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& v);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& v);

Rational make_rational(const Integer& num, const Integer& den);

bool is_integral(const Rational& v);

/// Floor of an exact rational.
Integer floor(const Rational& v);

}  // namespace pellsg
