#pragma once

#include <string>
#include <vector>

#include "displab/polynomial.hpp"

namespace displab {

// Integral of p q e^{-x} over [0, inf): sum_k c_k k! for c = coeffs(p q).
Rational laguerre_inner(const Polynomial& p, const Polynomial& q);

// <X^i, d^j L_n> in closed form, with the Pochhammer symbol extended to
// negative lengths; 0 when j > n.
Rational moment_xi_djLn(int i, int j, int n);

struct GramMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> entries;
    bool is_diagonal() const;
    std::string to_csv() const;
};

// Entries <p_i(s X), p_j(s X)> with s = -1 when flip_sign.
GramMatrix gram(const std::vector<Polynomial>& polys, bool flip_sign, std::vector<std::string> labels = {});

// C*_n: companion of the two-row digraph (n, n) at v_r; C*_1 = 1 when r = 2.
Polynomial catalan_polynomial(int n, int r = 2);

// <X^{2n+1}, C*_{n+2}(-X)>; family[k] must hold C*_{k+1}. ConsistencyError if it vanishes.
Rational maximality_witness(const std::vector<Polynomial>& family, int odd_degree);
// -C_{n+2} (n+3) (2n+1)! / (2 (2n+3)) with C_m the Catalan number.
Rational maximality_witness_formula(int n);

// Coefficients c minimizing ||p - sum c_i b_i|| for the e^{-x} inner product,
// i.e. the solution of Gram c = (<b_i, p>). DomainError on a singular Gram matrix.
std::vector<Rational> project(const std::vector<Polynomial>& basis, const Polynomial& p);

}  // namespace displab
