#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "displab/rational.hpp"

namespace displab {

// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of X^k;
// trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t k);
    static Polynomial x();

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const;
    Rational leading() const;

    Rational operator()(const Rational& at) const;

    Polynomial derivative(unsigned order = 1) const;
    // Primitive whose value at 0 is `constant`.
    Polynomial antiderivative(const Rational& constant) const;
    // p(-X)
    Polynomial compose_neg() const;
    Polynomial shift_degree(std::size_t k) const;  // X^k * p

    // gcd of numerators over lcm of denominators, with the sign of the leading
    // coefficient. Zero for the zero polynomial.
    Rational content() const;
    // Integer coprime coefficients with positive leading coefficient.
    Polynomial content_normalized() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Euclidean division; throws DomainError when the divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Content-normalized gcd (positive leading coefficient, integer coprime
// coefficients). gcd(p, 0) = content_normalized(p); gcd(0, 0) throws.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace displab
