#include "displab/orthogonality.hpp"

#include <sstream>

#include "displab/combinatorics.hpp"
#include "displab/companion.hpp"
#include "displab/error.hpp"

namespace displab {

Rational laguerre_inner(const Polynomial& p, const Polynomial& q) {
    Polynomial pq = p * q;
    Rational acc = 0;
    BigInt fact = 1;
    for (std::size_t k = 0; k < pq.coeffs().size(); ++k) {
        if (k > 0) fact *= static_cast<unsigned long>(k);
        acc += pq.coeffs()[k] * Rational(fact);
    }
    return acc;
}

Rational moment_xi_djLn(int i, int j, int n) {
    if (i < 0 || j < 0 || n < 0) throw DomainError("moment_xi_djLn needs i, j, n >= 0");
    if (j > n) return 0;
    Rational v = pochhammer_extended(BigInt(n - j + 1), j) * pochhammer_extended(BigInt(i - n + 1), n - j) *
                 pochhammer_extended(BigInt(n + 1), i - n);
    return n % 2 ? Rational(-v) : v;
}

bool GramMatrix::is_diagonal() const {
    for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = 0; b < entries[a].size(); ++b)
            if (a != b && entries[a][b] != 0) return false;
    return true;
}

std::string GramMatrix::to_csv() const {
    std::ostringstream out;
    out << "label";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t a = 0; a < entries.size(); ++a) {
        out << labels[a];
        for (const auto& e : entries[a]) out << ',' << to_string(e);
        out << '\n';
    }
    return out.str();
}

GramMatrix gram(const std::vector<Polynomial>& polys, bool flip_sign, std::vector<std::string> labels) {
    GramMatrix g;
    if (labels.empty())
        for (std::size_t k = 0; k < polys.size(); ++k) labels.push_back("p" + std::to_string(k));
    if (labels.size() != polys.size()) throw DomainError("gram: label count differs from polynomial count");
    g.labels = std::move(labels);
    std::vector<Polynomial> ps;
    for (const auto& p : polys) ps.push_back(flip_sign ? p.compose_neg() : p);
    g.entries.assign(ps.size(), std::vector<Rational>(ps.size()));
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a; b < ps.size(); ++b) g.entries[a][b] = g.entries[b][a] = laguerre_inner(ps[a], ps[b]);
    return g;
}

Polynomial catalan_polynomial(int n, int r) {
    if (r == 2 && n == 1) return Polynomial::constant(1);
    if (n < r) throw DomainError("catalan_polynomial needs n >= r");
    return two_row_companion(n, n, r);
}

Rational maximality_witness(const std::vector<Polynomial>& family, int odd_degree) {
    if (odd_degree < 1 || odd_degree % 2 == 0) throw DomainError("maximality_witness needs an odd degree");
    const auto n = static_cast<std::size_t>((odd_degree - 1) / 2);
    if (family.size() < n + 2) throw DomainError("family too short for this degree");
    Rational v = laguerre_inner(Polynomial::monomial(1, static_cast<std::size_t>(odd_degree)), family[n + 1].compose_neg());
    if (v == 0) throw ConsistencyError("maximality witness vanished");
    return v;
}

Rational maximality_witness_formula(int n) {
    if (n < 0) throw DomainError("maximality_witness_formula needs n >= 0");
    BigInt catalan = binomial(2 * (n + 2), n + 2) / (n + 3);
    return -make_rational(catalan * (n + 3) * factorial(2 * n + 1), BigInt(2 * (2 * n + 3)));
}

std::vector<Rational> project(const std::vector<Polynomial>& basis, const Polynomial& p) {
    const std::size_t m = basis.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) a[r][c] = laguerre_inner(basis[r], basis[c]);
        a[r][m] = laguerre_inner(basis[r], p);
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) throw DomainError("project: singular Gram matrix");
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    std::vector<Rational> out(m);
    for (std::size_t r = 0; r < m; ++r) out[r] = a[r][m] / a[r][r];
    return out;
}

}  // namespace displab
