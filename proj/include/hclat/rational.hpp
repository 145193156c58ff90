#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hclat {

/// Exact rational number. GMP keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

bool is_integer(const Rational& x);
Integer to_integer(const Rational& x);  // throws unless is_integer(x)
long to_long(const Rational& x);        // throws unless integral and in range

/// 2-adic valuation of a nonzero rational: ord2(num) - ord2(den).
long ord2(const Rational& x);
long ord2(const Integer& x);

/// Floor of x (toward -inf).
Integer floor(const Rational& x);

/// Representative of x modulo 1 in [0, 1).
Rational frac_mod1(const Rational& x);

/// "num/den" or "num" when integral. ASCII minus sign.
std::string to_string(const Rational& x);

/// Accepts "3", "-1/2", "+4/6" (reduced on parse). Also accepts the
/// unicode minus sign U+2212.
Rational parse_rational(std::string_view text);

/// Canonicalizes after construction from parts.
inline Rational canonical(Rational x) {
    x.canonicalize();
    return x;
}

}  // namespace hclat
