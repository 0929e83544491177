#include "displab/polynomial.hpp"

#include <algorithm>

#include "displab/error.hpp"

namespace displab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::x() { return monomial(1, 1); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::derivative(unsigned order) const {
    if (order == 0) return *this;
    if (coeffs_.size() <= order) return {};
    std::vector<Rational> out(coeffs_.size() - order);
    for (std::size_t k = order; k < coeffs_.size(); ++k) {
        BigInt falling = 1;
        for (unsigned j = 0; j < order; ++j) falling *= static_cast<unsigned long>(k - j);
        out[k - order] = coeffs_[k] * falling;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative(const Rational& constant) const {
    std::vector<Rational> out(coeffs_.size() + 1);
    out[0] = constant;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k + 1] = coeffs_[k] / Rational(static_cast<unsigned long>(k + 1));
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_neg() const {
    auto out = coeffs_;
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shift_degree(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

Rational Polynomial::content() const {
    if (is_zero()) return 0;
    BigInt num = 0;
    BigInt den = 1;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r = make_rational(num, den);
    return leading() < 0 ? -r : r;
}

Polynomial Polynomial::content_normalized() const {
    if (is_zero()) return {};
    Rational c = content();
    auto out = coeffs_;
    for (auto& v : out) v /= c;
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& v : a.coeffs_) v = -v;
    return a;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quot(rem.size() - b.coeffs().size() + 1);
    const Rational lead = b.leading();
    const std::size_t db = b.coeffs().size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational f = rem[k + db] / lead;
        quot[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    Polynomial x = a.content_normalized();
    Polynomial y = b.content_normalized();
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second.content_normalized();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

}  // namespace displab
