#pragma once

#include <span>

#include "displab/rational.hpp"

namespace displab {

BigInt factorial(long n);

// C(n, k); zero when k < 0 or k > n >= 0. Negative n uses the falling-factorial
// extension, so C(-1, 0) = 1.
BigInt binomial(long n, long k);

// (n_1 + ... + n_r)! / (n_1! ... n_r!)
BigInt multinomial(std::span<const long> parts);
BigInt multinomial(std::initializer_list<long> parts);

// Rising factorial z (z+1) ... (z+n-1), n >= 0.
BigInt pochhammer(const BigInt& z, long n);

// Rising factorial extended to negative lengths through Gamma(z+n)/Gamma(z):
// (z)_{-m} = 1 / ((z-1)(z-2)...(z-m)). Throws DomainError when that product vanishes.
Rational pochhammer_extended(const BigInt& z, long n);

// Combinations with repetition C(i+n-1, n): weakly decreasing labelings of a
// directed path of order n with values in {1..i}. CR(i, 0) = 1.
BigInt combinations_with_repetition(long i, long n);

BigInt power(const BigInt& base, unsigned long exponent);

}  // namespace displab
