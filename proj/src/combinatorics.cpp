#include "displab/combinatorics.hpp"

#include "displab/error.hpp"

namespace displab {

BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), BigInt(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(std::span<const long> parts) {
    BigInt r = 1;
    long total = 0;
    for (long p : parts) {
        if (p < 0) throw DomainError("multinomial with a negative part");
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

BigInt multinomial(std::initializer_list<long> parts) {
    return multinomial(std::span<const long>(parts.begin(), parts.size()));
}

BigInt pochhammer(const BigInt& z, long n) {
    if (n < 0) throw DomainError("pochhammer with negative length; use pochhammer_extended");
    BigInt r = 1;
    for (long k = 0; k < n; ++k) r *= z + k;
    return r;
}

Rational pochhammer_extended(const BigInt& z, long n) {
    if (n >= 0) return Rational(pochhammer(z, n));
    BigInt d = 1;
    for (long k = 1; k <= -n; ++k) d *= z - k;
    if (d == 0) throw DomainError("pochhammer_extended: pole of the Gamma ratio");
    return make_rational(1, d);
}

BigInt combinations_with_repetition(long i, long n) {
    if (n == 0) return 1;
    return binomial(i + n - 1, n);
}

BigInt power(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

}  // namespace displab
