// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <thread>

#include "displab/combinatorics.hpp"
#include "displab/companion.hpp"
#include "displab/extremal.hpp"
#include "displab/families.hpp"
#include "displab/laguerre.hpp"
#include "displab/nonstrict.hpp"
#include "displab/ode.hpp"
#include "displab/orthogonality.hpp"
#include "displab/series.hpp"
#include "displab/strict_count.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace displab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

const nlohmann::json& T() { return fixture::tables(); }

BigInt zig(int n) { return BigInt(T()["generalized_zigzag"]["0"][static_cast<std::size_t>(n)].get<std::string>()); }

Outcome zigzag_sequence() {
    Outcome o;
    for (int n = 0; n <= 14; ++n) o.expect(staircase_counter(n) == zig(n), "s_" + std::to_string(n));
    return o;
}

Outcome generalized_zigzag() {
    Outcome o;
    for (int n = 0; n <= 14; ++n) {
        auto d = staircase_data(n, 5);
        for (int i = 1; i <= 5; ++i) {
            BigInt want(T()["generalized_zigzag"][std::to_string(i)][static_cast<std::size_t>(n)].get<std::string>());
            o.expect(d.s_gen[static_cast<std::size_t>(i)] == want, "s_{" + std::to_string(n) + "," + std::to_string(i) + "}");
        }
    }
    return o;
}

Outcome catalan_polynomials() {
    Outcome o;
    for (int n = 2; n <= 6; ++n)
        o.expect(two_row_companion(n, n, 2) == fixture::poly(T()["catalan_polynomials"][std::to_string(n)]),
                 "C*_" + std::to_string(n));
    return o;
}

Outcome catalan_odes() {
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
        auto printed = fixture::ode(T()["catalan_odes"][std::to_string(n)]);
        o.expect(catalan_ode(n, 2).normalized() == printed.normalized(), "equation " + std::to_string(n));
    }
    for (int n = 2; n <= 8; ++n)
        o.expect(verify_ode(catalan_ode(n, 2), two_row_companion(n, n, 2)), "verify " + std::to_string(n));
    return o;
}

Outcome two_row_instance() {
    Outcome o;
    const auto& e = T()["two_row_2_3_v2"];
    auto p = fixture::poly(e["poly"]);
    auto printed = fixture::ode(e["ode"]);
    auto g = make_family(TwoRowFamily{2, 3});
    o.expect(companion_from_counters(g, resolve_vertex(TwoRowFamily{2, 3}, "v2")).poly == p, "companion");
    o.expect(verify_ode(printed, p), "printed equation");
    o.expect(same_equation(two_row_ode(2, 3, 2), printed), "closed-form equation");
    return o;
}

Outcome staircase_tables() {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
        auto key = std::to_string(n);
        auto t = companion_by_recurrence(make_family(StaircaseFamily{n}), 0);
        o.expect(Polynomial(laguerre_basis_decompose_flipped(t).g) == fixture::poly(T()["staircase_g"][key]), "g " + key);
        if (n < 2) continue;
        auto qr = reduce_to_QR(t.compose_neg());
        o.expect(qr.Q == fixture::poly(T()["staircase_qr"][key]["Q"]) && qr.R == fixture::poly(T()["staircase_qr"][key]["R"]),
                 "Q/R " + key);
        o.expect(same_equation(laguerrean_flipped(t), fixture::ode(T()["staircase_odes"][key])), "equation " + key);
    }
    return o;
}

Outcome orthogonality() {
    Outcome o;
    std::vector<Polynomial> fam;
    for (int n = 1; n <= 6; ++n) fam.push_back(catalan_polynomial(n));
    o.expect(gram(fam, true).is_diagonal(), "r=2 Gram matrix");
    auto g3 = gram({catalan_polynomial(3, 3), catalan_polynomial(4, 3)}, true);
    o.expect(g3.entries[0][1] == Rational(T()["r3_cross_inner_product"].get<std::string>()), "r=3 cross product");
    return o;
}

Outcome laguerre_identifications() {
    Outcome o;
    for (int j = 0; j <= 12; ++j)
        o.expect(companion_by_recurrence(make_family(PathFamily{j + 1}), 0) == oracle::laguerre_explicit(j).compose_neg(),
                 "path " + std::to_string(j));
    for (int j = 0; j <= 10; ++j) {
        auto t = companion_by_recurrence(make_family(EmptyFamily{j + 1}), 0);
        for (int k = 0; k <= j; ++k)
            o.expect(t.coeff(static_cast<std::size_t>(k)) ==
                         Rational(oracle::choose(j, k) * oracle::choose(j + 1, k + 1) * oracle::fact(j - k)),
                     "a_{" + std::to_string(j) + "," + std::to_string(k) + "}");
        o.expect(verify_ode(Ode2({0, 1}, {2, 1}, {-j}), t), "empty equation " + std::to_string(j));
    }
    return o;
}

Outcome oracle_suites() {
    Outcome o;
    for (int n = 0; n <= 4; ++n)
        for (const auto& d : oracle::all_digraphs(n)) o.expect(count(d) == count_bruteforce(d), "exhaustive");
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 10000; ++t) {
        int n = 5 + t % 3;
        double p = 0.15 + 0.1 * (t % 5);
        auto d = t % 2 ? oracle::random_dag(rng, n, p) : oracle::random_digraph(rng, n, p);
        o.expect(count(d) == count_bruteforce(d), "random strict");
    }
    for (int t = 0; t < 5000; ++t) {
        int n = 1 + t % 5, i = 1 + (t / 5) % 5;
        auto d = oracle::random_digraph(rng, n, 0.1 + 0.1 * (t % 4));
        o.expect(nonstrict_count(d, i) == nonstrict_bruteforce(d, i), "random non-strict");
    }
    return o;
}

Outcome extremal() {
    Outcome o;
    for (int m = 1; m <= 7; ++m) {
        auto r = max_counter_search(m, std::max(1u, std::thread::hardware_concurrency()));
        o.expect(r.max_counter == zig(m) && r.argmax_are_staircases, "order " + std::to_string(m));
    }
    o.expect(count(make_family(EmptyFamily{5})) == 120 && 120 > zig(5), "E_5");
    o.expect(count(make_family(StarFamily{5})) == 24 && 24 > zig(5), "star");
    return o;
}

Outcome nonstrict_series() {
    Outcome o;
    for (int j = 1; j <= 6; ++j) {
        auto want = exp_series(1, 12) * poly_to_series(laguerre(j - 1).compose_neg(), 12);
        o.expect(nonstrict_series_fixed_size(j, 12) == want, "F_j " + std::to_string(j));
    }
    auto half = Rational(1, 2);
    auto diag = half * (poly_to_series({1}, 16) + exp_series(2, 16) * bessel_I_series(0, 2, 16));
    o.expect(nonstrict_series_diagonal(16) == diag, "diagonal");
    o.expect(verify_ode_on_series(nonstrict_path_ode(), nonstrict_series_diagonal(16), Polynomial{1}), "inhomogeneous");
    o.expect(verify_ode_on_series(nonstrict_path_ode(), exp_series(2, 16) * bessel_I_series(0, 2, 16)), "exp I_0");
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (int k = 1; k <= 3; ++k)
                o.expect(verify_ode_on_series(bessel_exp_ode(n, m, k),
                                              exp_series(n, 16) * bessel_I_series(static_cast<unsigned>(m), k, 16)),
                         "F_{n,m,k}");
    return o;
}

Outcome sec_plus_tan() {
    Outcome o;
    std::vector<BigInt> s;
    for (int n = 0; n <= 13; ++n) s.push_back(staircase_counter(n));
    for (int n = 1; n <= 12; ++n) {
        BigInt rhs = 0;
        for (int k = 0; k <= n; ++k) rhs += binomial(n, k) * s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(n - k)];
        o.expect(2 * s[static_cast<std::size_t>(n + 1)] == rhs, "n = " + std::to_string(n));
    }
    // 2F' = 1 + F^2 on the truncated series
    auto F = series_from_counters(s);
    auto lhs = Rational(2) * F.derivative();
    auto rhs = poly_to_series({1}, 12) + (F * F).truncated(12);
    o.expect(lhs == rhs, "2F' = 1 + F^2");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> check;
    };
    std::vector<Criterion> all{
        {1, "zigzag sequence", 1, zigzag_sequence},
        {2, "generalized zigzag tables", 10, generalized_zigzag},
        {3, "Catalan polynomials", 5, catalan_polynomials},
        {4, "Catalan equations", 60, catalan_odes},
        {5, "two-row (2,3) at v2", 60, two_row_instance},
        {6, "staircase equations, Q/R pairs, g-tuples", 60, staircase_tables},
        {7, "orthogonality", 60, orthogonality},
        {8, "Laguerre identifications", 60, laguerre_identifications},
        {9, "oracle suites", 120, oracle_suites},
        {10, "extremal certification", 300, extremal},
        {11, "non-strict series", 60, nonstrict_series},
        {12, "sec + tan generatrix", 60, sec_plus_tan},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) {
            o.ok = false;
            o.detail = "over the time limit";
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name << "  (" << std::fixed
                  << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_s << " s)";
        if (!o.ok) std::cout << "  " << o.detail;
        std::cout << "\n";
    }
    return failed ? 1 : 0;
}
