#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hfischer {

/// Exact rational number. Arithmetic results are canonical; the two-argument GMP
/// constructor is not, so build fractions with ratio().
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" with an optional leading sign. Throws std::invalid_argument
/// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms. Throws std::invalid_argument for a zero denominator.
Rational ratio(long num, long den);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace hfischer
