#include "displab/ode.hpp"

#include "displab/combinatorics.hpp"
#include "displab/error.hpp"
#include "displab/laguerre.hpp"

namespace displab {

namespace {

Polynomial poly_from(std::initializer_list<BigInt> c) {
    std::vector<Rational> v;
    for (const auto& x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}

// Common scalar making every coefficient of the triple an integer with overall gcd 1.
Rational joint_content(const std::vector<const Polynomial*>& ps) {
    BigInt num = 0, den = 1;
    for (const auto* p : ps)
        for (const auto& c : p->coeffs()) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        }
    if (num == 0) return 1;
    return make_rational(num, den);
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ConsistencyError("expected exact polynomial division");
    return q;
}

// (a, b) -> coefficients of the derivative in the (L_n, L_n') module.
std::pair<RationalFunction, RationalFunction> module_step(const RationalFunction& a, const RationalFunction& b, int n) {
    const RationalFunction x(Polynomial::x());
    const RationalFunction nn(Polynomial::constant(n));
    const RationalFunction xm1(Polynomial{-1, 1});
    return {a.derivative() - nn * b / x, a + b.derivative() + xm1 * b / x};
}

}  // namespace

LaguerreBasisCoeffs laguerre_basis_decompose(const Polynomial& p, int n) {
    if (p.is_zero()) throw DomainError("cannot decompose the zero polynomial");
    if (n < 0) n = p.degree();
    if (n < p.degree()) throw DomainError("basis index below the polynomial degree");
    // Coefficient of X^k in X^i d^i L_n is C(n,k) (-1)^k / (k-i)!, so the system
    // is lower triangular in k.
    LaguerreBasisCoeffs out;
    out.n = n;
    out.g.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = p.coeff(static_cast<std::size_t>(k));
        Rational diag = Rational(binomial(n, k));
        if (k % 2) diag = -diag;
        for (int i = 0; i < k; ++i)
            acc -= out.g[static_cast<std::size_t>(i)] * diag / Rational(factorial(k - i));
        out.g[static_cast<std::size_t>(k)] = acc / diag;
    }
    return out;
}

Polynomial laguerre_basis_reconstruct(const LaguerreBasisCoeffs& c) {
    Polynomial L = laguerre(c.n), out;
    for (std::size_t i = 0; i < c.g.size(); ++i)
        out += c.g[i] * L.derivative(static_cast<unsigned>(i)).shift_degree(i);
    return out;
}

LaguerreBasisCoeffs laguerre_basis_decompose_flipped(const Polynomial& p, int n) {
    auto c = laguerre_basis_decompose(p.compose_neg(), n);
    for (std::size_t i = 1; i < c.g.size(); i += 2) c.g[i] = -c.g[i];
    return c;
}

ABReduction ab_reduction(int n, int imax) {
    if (n < 0) throw DomainError("ab_reduction needs n >= 0");
    if (imax < 0) imax = n;
    ABReduction r;
    r.n = n;
    r.A.emplace_back(Polynomial::constant(1));
    r.B.emplace_back(Polynomial());
    for (int i = 1; i <= imax; ++i) {
        auto [a, b] = module_step(r.A.back(), r.B.back(), n);
        r.A.push_back(std::move(a));
        r.B.push_back(std::move(b));
    }
    return r;
}

QRPair reduce_to_QR(const Polynomial& p) {
    auto g = laguerre_basis_decompose(p);
    auto ab = ab_reduction(g.n);
    RationalFunction Q, R;
    for (std::size_t i = 0; i < g.g.size(); ++i) {
        RationalFunction xi(Polynomial::monomial(g.g[i], i));
        Q = Q + xi * ab.A[i];
        R = R + xi * ab.B[i];
    }
    return {g.n, Q.as_polynomial(), R.as_polynomial()};
}

Ode2::Ode2(Polynomial U, Polynomial V, Polynomial W) : U_(std::move(U)), V_(std::move(V)), W_(std::move(W)) {}

Ode2 Ode2::normalized() const {
    if (is_trivial()) return *this;
    Polynomial g;
    for (const auto* p : {&U_, &V_, &W_})
        if (!p->is_zero()) g = g.is_zero() ? p->content_normalized() : gcd(g, *p);
    Polynomial u = exact_quotient(U_, g), v = exact_quotient(V_, g), w = exact_quotient(W_, g);
    Rational c = joint_content({&u, &v, &w});
    const Polynomial& lead = !u.is_zero() ? u : !v.is_zero() ? v : w;
    if (lead.leading() < 0) c = -c;
    Rational inv = 1 / c;
    return Ode2(u * inv, v * inv, w * inv);
}

Ode2 Ode2::flipped() const { return Ode2(U_.compose_neg(), -V_.compose_neg(), W_.compose_neg()); }

Polynomial Ode2::apply(const Polynomial& y) const {
    return U_ * y.derivative(2) + V_ * y.derivative() + W_ * y;
}

Ode2 Ode2::scaled(const Rational& c) const { return Ode2(U_ * c, V_ * c, W_ * c); }

bool same_equation(const Ode2& a, const Ode2& b) { return a.normalized() == b.normalized(); }

Ode2 laguerrean(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("laguerrean of the zero polynomial");
    auto [n, Q, R] = reduce_to_QR(p);
    RationalFunction a0(Q), b0(R);
    auto [a1, b1] = module_step(a0, b0, n);
    auto [a2, b2] = module_step(a1, b1, n);
    RationalFunction U = a0 * b1 - a1 * b0;
    RationalFunction V = -(a0 * b2 - a2 * b0);
    RationalFunction W = a1 * b2 - a2 * b1;
    if (U.is_zero() && V.is_zero() && W.is_zero()) return Ode2({}, p, -p.derivative()).normalized();
    // Common denominator: lcm of the three monic denominators.
    Polynomial den = U.denominator();
    for (const auto* f : {&V, &W}) den = exact_quotient(den * f->denominator(), gcd(den, f->denominator()));
    auto clear = [&](const RationalFunction& f) {
        return f.numerator() * exact_quotient(den, f.denominator());
    };
    return Ode2(clear(U), clear(V), clear(W)).normalized();
}

Ode2 laguerrean_flipped(const Polynomial& p) { return laguerrean(p.compose_neg()).flipped().normalized(); }

Ode2 laguerre_ode(int n) {
    if (n < 0) throw DomainError("laguerre_ode needs n >= 0");
    return Ode2(Polynomial{0, 1}, Polynomial{1, -1}, Polynomial::constant(n));
}

Ode2 empty_digraph_ode(int j) {
    if (j < 0) throw DomainError("empty_digraph_ode needs j >= 0");
    return Ode2(Polynomial{0, 1}, Polynomial{2, 1}, Polynomial::constant(-j));
}

Ode2 bessel_exp_ode(const Rational& n, const Rational& m, const Rational& k) {
    return Ode2(Polynomial{0, 0, 1}, Polynomial{0, 1, -2 * n}, Polynomial{-m * m, -n, n * n - k * k});
}

Ode2 nonstrict_path_ode() { return Ode2(Polynomial{0, 1}, Polynomial{1, -4}, Polynomial::constant(-2)); }

Ode2 two_row_ode(int n1, int n2, int r) {
    if (n1 < 0 || n1 > n2 || n2 < r || (r != 2 && r != 3))
        throw DomainError("two_row_ode needs r in {2,3} and 0 <= n1 <= n2 with n2 >= r");
    const BigInt a = n1, b = n2, s = n1 + n2;
    Ode2 ode;
    if (r == 2) {
        BigInt alpha = pochhammer(s - 2, 3) * pochhammer(s - 1, 2);
        BigInt beta = a * (b + 1) * (a * a + b * b + a * b - 2 * a - b);
        BigInt gamma = pochhammer(s - 2, 3) *
                       (a * a * a + b * b * b + 3 * a * a * b + 3 * a * b * b - 3 * a * a - 3 * b * b - 7 * a * b + a + 2 * b);
        ode = Ode2(poly_from({0, alpha, beta}), poly_from({alpha, alpha, beta}), poly_from({-gamma, -(s - 2) * beta}));
    } else {
        const BigInt a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a;
        const BigInt b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b;
        BigInt alpha = pochhammer(s - 4, 5) * pochhammer(s - 3, 4);
        BigInt beta = 2 * a * (b + 1) *
                      (a6 + 7 * a5 * (b - 2) + a4 * (15 * b2 - 72 * b + 77) + a3 * (16 * b3 - 119 * b2 + 279 * b - 208) +
                       a2 * (15 * b4 - 107 * b3 + 333 * b2 - 490 * b + 276) +
                       a * (7 * b5 - 67 * b4 + 227 * b3 - 384 * b2 + 352 * b - 144) +
                       b * (b5 - 15 * b4 + 74 * b3 - 156 * b2 + 144 * b - 48));
        BigInt gamma = 2 * pochhammer(a - 1, 2) * pochhammer(b, 2) * (s - 2) * (a2 - 3 * a + (b - 1) * b);
        BigInt delta = 2 * a * (b + 1) *
                       (a6 + 7 * a5 * (b - 2) + a4 * (15 * b2 - 73 * b + 77) + a3 * (16 * b3 - 120 * b2 + 285 * b - 208) +
                        a2 * (15 * b4 - 108 * b3 + 338 * b2 - 501 * b + 276) +
                        a * (7 * b5 - 68 * b4 + 231 * b3 - 390 * b2 + 358 * b - 144) +
                        b * (b5 - 15 * b4 + 75 * b3 - 159 * b2 + 146 * b - 48));
        BigInt epsilon = pochhammer(s - 4, 5) *
                         (6 * a - 29 * a2 + 27 * a3 - 9 * a4 + a5 + 18 * b - 78 * a * b + 91 * a2 * b - 38 * a3 * b +
                          5 * a4 * b - 39 * b2 + 97 * a * b2 - 60 * a2 * b2 + 10 * a3 * b2 + 29 * b3 - 38 * a * b3 +
                          10 * a2 * b3 - 9 * b4 + 5 * a * b4 + b5);
        BigInt zeta = 2 * a * (b + 1) * (s - 4) *
                      (a6 + a5 * (7 * b - 13) + a4 * (15 * b2 - 68 * b + 67) + a3 * (16 * b3 - 114 * b2 + 249 * b - 171) +
                       a2 * (15 * b4 - 102 * b3 + 302 * b2 - 414 * b + 216) +
                       a * (7 * b5 - 63 * b4 + 203 * b3 - 327 * b2 + 282 * b - 108) +
                       b * (b5 - 14 * b4 + 65 * b3 - 130 * b2 + 114 * b - 36));
        ode = Ode2(poly_from({0, alpha, beta, gamma}), poly_from({alpha, alpha, delta, gamma}),
                   poly_from({-epsilon, -zeta, -(s - 3) * gamma}));
    }
    if (ode.is_trivial())
        throw DomainError("closed-form coefficients vanish identically for (" + std::to_string(n1) + "," +
                          std::to_string(n2) + "," + std::to_string(r) + ")");
    return ode.normalized();
}

Ode2 catalan_ode(int n, int r) {
    const BigInt m = n;
    if (r == 2) {
        if (n < 2) throw DomainError("catalan_ode(n, 2) needs n >= 2");
        BigInt q = 8 * (2 * m - 1) * (2 * m - 1);
        return Ode2(poly_from({0, q, 3 * (m + 1)}), poly_from({q, q, 3 * (m + 1)}),
                    poly_from({-4 * (2 * m - 1) * (8 * m * m - 13 * m + 3), 6 * (m + 1) * (1 - m)}));
    }
    if (r == 3) {
        if (n < 3) throw DomainError("catalan_ode(n, 3) needs n >= 3");
        const BigInt m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m;
        BigInt A = 72 - 384 * m + 704 * m2 - 512 * m3 + 128 * m4;
        BigInt top = 2 * m + 2 * m2;
        return Ode2(poly_from({0, A, 48 - 25 * m - 42 * m2 + 31 * m3, top}),
                    poly_from({A, A, 48 - 27 * m - 44 * m2 + 31 * m3, top}),
                    poly_from({-2 * (-72 + 558 * m - 1438 * m2 + 1560 * m3 - 744 * m4 + 128 * m5),
                               -2 * (-72 + 90 * m + 37 * m2 - 94 * m3 + 31 * m4), -2 * (-3 * m - m2 + 2 * m3)}));
    }
    throw DomainError("catalan_ode needs r in {2,3}");
}

bool verify_ode(const Ode2& ode, const Polynomial& p) { return ode.apply(p).is_zero(); }

bool verify_ode_on_series(const Ode2& ode, const TruncatedSeries& s, const Polynomial& inhomogeneous) {
    if (s.order() < 4) throw DomainError("verify_ode_on_series needs order >= 4");
    const std::size_t N = s.order() - 2;
    TruncatedSeries d1 = s.derivative(), d2 = d1.derivative();
    TruncatedSeries res = poly_to_series(ode.U(), N) * d2.truncated(N) + poly_to_series(ode.V(), N) * d1.truncated(N) +
                          poly_to_series(ode.W(), N) * s.truncated(N) + poly_to_series(inhomogeneous, N);
    for (const auto& c : res.coeffs())
        if (c != 0) return false;
    return true;
}

}  // namespace displab
