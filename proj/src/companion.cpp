#include "displab/companion.hpp"

#include <map>
#include <unordered_map>

#include "displab/combinatorics.hpp"
#include "displab/error.hpp"
#include "displab/families.hpp"
#include "displab/laguerre.hpp"
#include "displab/ode.hpp"
#include "displab/strict_count.hpp"

namespace displab {

namespace {

void require_vertex(const SimpleDigraph& d, int v) {
    if (v < 0 || v >= d.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

// sum_i c_i X^i (d^i L_N)(-X)
Polynomial flipped_basis_sum(const std::vector<Rational>& c, int N) {
    Polynomial L = laguerre(N), out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out += c[i] * L.derivative(static_cast<unsigned>(i)).compose_neg().shift_degree(i);
    return out;
}

}  // namespace

std::vector<BigInt> counters_along_path(const SimpleDigraph& d, int v, int horizon, bool reversed) {
    require_vertex(d, v);
    if (horizon < 0) throw DomainError("negative horizon");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int i = 0; i <= horizon; ++i) out.push_back(count(attach_path(d, v, i, reversed)));
    return out;
}

CompanionResult companion_from_counters(const SimpleDigraph& d, int v, bool reversed) {
    require_vertex(d, v);
    const int n = d.order();
    CompanionResult res;
    res.vertex = v;
    res.dual = reversed;
    res.counters = counters_along_path(d, v, 2 * n - 1, reversed);
    std::vector<Rational> t(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) {
        Rational acc = 0;
        for (int j = 0; j <= i; ++j) {
            Rational term = Rational(res.counters[static_cast<std::size_t>(j)]) / Rational(factorial(j)) /
                            Rational(factorial(i - j));
            if ((i - j) % 2) term = -term;
            acc += term;
        }
        t[static_cast<std::size_t>(i)] = acc;
    }
    for (int i = n; i < 2 * n; ++i)
        if (t[static_cast<std::size_t>(i)] != 0)
            throw ConsistencyError("companion deconvolution left a nonzero coefficient at degree " + std::to_string(i));
    t.resize(static_cast<std::size_t>(n));
    res.poly = Polynomial(std::move(t));
    return res;
}

Polynomial companion_by_recurrence(const SimpleDigraph& d, int v) {
    require_vertex(d, v);
    if (d.order() > kMaxRecurrenceOrder)
        throw SizeError("companion_by_recurrence is limited to " + std::to_string(kMaxRecurrenceOrder) + " vertices");
    if (d.had_loop() || !is_acyclic(d)) return {};
    CounterTable sigma(d);
    const auto out = d.out_masks();
    std::unordered_map<std::uint64_t, Polynomial> memo;
    auto rec = [&](auto&& self, VertexSet s) -> Polynomial {
        if (auto it = memo.find(s.bits()); it != memo.end()) return it->second;
        Polynomial deriv;
        s.for_each([&](int w) {
            if (w == v || (out[static_cast<std::size_t>(w)] & s.bits()) != 0) return;
            Polynomial t = self(self, s.without(w));
            deriv += t + t.derivative();
        });
        Polynomial t = deriv.antiderivative(Rational(sigma.sigma(s)));
        memo.emplace(s.bits(), t);
        return t;
    };
    return rec(rec, VertexSet::full(d.order()));
}

Polynomial companion_dual(const SimpleDigraph& d, int v) { return companion_by_recurrence(reverse(d), v); }

BigInt sigma_minus_one(const SimpleDigraph& d, int v) {
    require_vertex(d, v);
    if (!d.out_neighbors(v).empty()) return 0;
    return count(induced_subgraph(d, VertexSet::full(d.order()).without(v)));
}

TwoRowDecomposition two_row_decomposition(int n1, int n2, int r) {
    if (n1 < 0 || n1 > n2 || r < 1 || r > n2)
        throw DomainError("two-row parameters need 0 <= n1 <= n2 and 1 <= r <= n2");
    std::map<std::tuple<int, int, int>, Rational> memo;
    auto f = [&](auto&& self, int a, int b, int i) -> Rational {
        if (i > std::min(a, r - 1)) return 0;
        if (a == 0) return 1;
        auto key = std::tuple{a, b, i};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Rational val;
        if (a <= b - 1 && b >= r + 1) {
            Rational den(BigInt(a - b - 1) * (a + b) * (a + b - r));
            val = Rational(BigInt(a) * (a - b - 2) * (a + b - r - i)) / den * self(self, a - 1, b, i) +
                  Rational(BigInt(a - b) * (b + 1) * (a + b - r - i)) / den * self(self, a, b - 1, i);
        } else if (b == r) {
            BigInt den = BigInt(r) * r + r + BigInt(a) * (1 - a);
            val = make_rational(BigInt(i - a) * (a - r - 2), den) * self(self, a - 1, r, i) +
                  make_rational(BigInt(r) * r + BigInt(1 - a) * r - a, den * factorial(i));
        } else if (a == b && a > r) {
            val = make_rational(2 * a - r - i, 2 * a - r) * self(self, a - 1, a, i);
        } else {
            throw ConsistencyError("two-row recurrence reached an uncovered case");
        }
        memo.emplace(key, val);
        return val;
    };
    TwoRowDecomposition out{n1, n2, r, {}};
    for (int i = 0; i <= std::min(n1, r - 1); ++i) out.f.push_back(f(f, n1, n2, i));
    return out;
}

Polynomial two_row_companion(int n1, int n2, int r) {
    auto dec = two_row_decomposition(n1, n2, r);
    return Rational(two_row_counter(n1, n2)) * flipped_basis_sum(dec.f, n1 + n2 - r);
}

Polynomial two_row_closed_form_r2(int n1, int n2) {
    if (n1 < 0 || n1 > n2 || n2 < 2) throw DomainError("r = 2 closed form needs 0 <= n1 <= n2, n2 >= 2");
    if (n1 == 0 && n2 == 2) return Polynomial::constant(1);
    const int N = n1 + n2 - 2;
    Rational c1 = make_rational(BigInt(n1) * n2 + n1, BigInt(n1 + n2) * (n1 + n2 - 1) * N);
    return Rational(two_row_counter(n1, n2)) * flipped_basis_sum({1, c1}, N);
}

Polynomial two_row_closed_form_r3(int n1, int n2) {
    if (n1 < 0 || n1 > n2 || n2 < 3) throw DomainError("r = 3 closed form needs 0 <= n1 <= n2, n2 >= 3");
    if (n1 == 0 && n2 == 3) return Polynomial::constant(1);
    if (n1 == 0 && n2 == 4) return Polynomial{1, 1};
    if (n1 == 1 && n2 == 3) return Polynomial{3, 1};
    const int N = n1 + n2 - 3;
    const BigInt a = n1, b = n2;
    BigInt den1 = pochhammer(BigInt(N), 4) * N;
    BigInt den2 = pochhammer(BigInt(n1 + n2 - 4), 5) * N;
    if (den1 == 0 || den2 == 0) throw DomainError("r = 3 closed form has a vanishing denominator here");
    Rational c1 = make_rational(2 * a * (b + 1) * (a * a + 3 * a * b + b * b - 5 * a - 6 * b + 6), den1);
    Rational c2 = make_rational(2 * pochhammer(a - 1, 2) * pochhammer(b, 2), den2);
    return Rational(two_row_counter(n1, n2)) * flipped_basis_sum({1, c1, c2}, N);
}

Rational staircase_f(int n, int i) {
    if (n < 0 || i < 0) throw DomainError("staircase_f needs n, i >= 0");
    std::map<std::pair<int, int>, Rational> memo;
    auto f = [&](auto&& self, int m, int k) -> Rational {
        if (m <= 1) return 1;
        if (k == 0) return Rational(staircase_counter(m));
        if (auto it = memo.find({m, k}); it != memo.end()) return it->second;
        Rational acc = self(self, m, k - 1);
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial(m + k - 1, k + j) * staircase_counter(m - 1 - j)) * self(self, j, k);
        acc /= 2;
        memo.emplace(std::pair{m, k}, acc);
        return acc;
    };
    return f(f, n, i);
}

Polynomial StaircaseData::companion() const {
    std::vector<Rational> c(a.begin(), a.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(a.size()), std::max(n, 1)));
    return Polynomial(std::move(c));
}

StaircaseData staircase_data(int n, int horizon) {
    if (n < 0 || horizon < 0) throw DomainError("staircase_data needs n, horizon >= 0");
    StaircaseData out;
    out.n = n;
    for (int i = 0; i <= horizon; ++i) {
        out.f_row.push_back(staircase_f(n, i));
        Rational a = out.f_row.back() / Rational(factorial(i));
        for (int k = 0; k < i; ++k) a -= out.a[static_cast<std::size_t>(k)] / Rational(factorial(i - k));
        if (n >= 1 && i >= n && a != 0) throw ConsistencyError("staircase companion exceeds degree n-1");
        out.a.push_back(a);
        Rational s = a * Rational(factorial(i));
        if (!is_integer(s)) throw ConsistencyError("generalized zigzag number is not an integer");
        out.s_gen.push_back(s.get_num());
    }
    if (n >= 1) {
        Polynomial t = n - 1 <= horizon ? out.companion() : staircase_data(n, n - 1).companion();
        out.g = laguerre_basis_decompose_flipped(t, n - 1).g;
    }
    return out;
}

}  // namespace displab
