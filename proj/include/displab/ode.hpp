#pragma once

#include <string>
#include <vector>

#include "displab/polynomial.hpp"
#include "displab/rational_function.hpp"
#include "displab/series.hpp"

namespace displab {

// p = sum_i g[i] * X^i * d^i L_n(X).
struct LaguerreBasisCoeffs {
    int n = 0;
    std::vector<Rational> g;
};

// n defaults to deg p; any n >= deg p is accepted. DomainError on the zero
// polynomial or n < deg p.
LaguerreBasisCoeffs laguerre_basis_decompose(const Polynomial& p, int n = -1);
Polynomial laguerre_basis_reconstruct(const LaguerreBasisCoeffs& c);
// Coefficients h with p(X) = sum_i h[i] * X^i * (d^i L_n)(-X); h[i] = (-1)^i g[i]
// where g decomposes p(-X).
LaguerreBasisCoeffs laguerre_basis_decompose_flipped(const Polynomial& p, int n = -1);

// d^i L_n = A[i] L_n + B[i] L_n' for i = 0..imax.
struct ABReduction {
    int n = 0;
    std::vector<RationalFunction> A, B;
};
ABReduction ab_reduction(int n, int imax = -1);

// p = Q L_n + R L_n' with n = deg p.
struct QRPair {
    int n = 0;
    Polynomial Q, R;
};
QRPair reduce_to_QR(const Polynomial& p);

// U Y'' + V Y' + W Y = 0.
class Ode2 {
public:
    Ode2() = default;
    Ode2(Polynomial U, Polynomial V, Polynomial W);

    const Polynomial& U() const { return U_; }
    const Polynomial& V() const { return V_; }
    const Polynomial& W() const { return W_; }
    bool is_trivial() const { return U_.is_zero() && V_.is_zero() && W_.is_zero(); }

    // Divided by the polynomial gcd of (U, V, W), integer coprime coefficients,
    // positive leading coefficient on the first nonzero of U, V, W.
    Ode2 normalized() const;
    // The equation satisfied by Y(-X) when this one is satisfied by Y(X).
    Ode2 flipped() const;
    Polynomial apply(const Polynomial& y) const;
    Ode2 scaled(const Rational& c) const;

    friend bool operator==(const Ode2&, const Ode2&) = default;

private:
    Polynomial U_, V_, W_;
};

bool same_equation(const Ode2& a, const Ode2& b);

// Eliminates L_n and L_n' from the expressions of p, p', p'' in the
// (L_n, L_n') module. Falls back to p Y' - p' Y = 0 when all three minors vanish.
Ode2 laguerrean(const Polynomial& p);
// laguerrean(p(-X)) transported back to p.
Ode2 laguerrean_flipped(const Polynomial& p);

Ode2 laguerre_ode(int n);
// Satisfied by the companion of E_{j+1}.
Ode2 empty_digraph_ode(int j);
// X^2 Y'' + (X - 2nX^2) Y' + (-m^2 - nX + (n^2 - k^2) X^2) Y = 0, solved by exp(nX) I_m(kX).
Ode2 bessel_exp_ode(const Rational& n, const Rational& m, const Rational& k);
// X Y'' + (1 - 4X) Y' - 2Y (+1 = 0), satisfied by the non-strict path generatrix.
Ode2 nonstrict_path_ode();

// Closed-form equations for the companion of the two-row digraph at v_r,
// r in {2, 3}. Returned normalized. DomainError outside the range or where the
// closed-form coefficients all vanish.
Ode2 two_row_ode(int n1, int n2, int r);
// Simplified Catalan equations with the printed scaling (not normalized).
Ode2 catalan_ode(int n, int r);

bool verify_ode(const Ode2& ode, const Polynomial& p);
// Residual U s'' + V s' + W s + inhomogeneous vanishes through order N - 2.
// DomainError when the series order is below 4.
bool verify_ode_on_series(const Ode2& ode, const TruncatedSeries& s, const Polynomial& inhomogeneous = {});

}  // namespace displab
