#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace displab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Reduced num/den; throws DomainError on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "p/q", optional sign, surrounding blanks.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

bool is_integer(const Rational& q);

}  // namespace displab
