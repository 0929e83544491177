#include <random>

#include "doctest.h"
#include "displab/companion.hpp"
#include "displab/error.hpp"
#include "displab/families.hpp"
#include "displab/laguerre.hpp"
#include "displab/series.hpp"
#include "displab/strict_count.hpp"
#include "oracles.hpp"

using namespace displab;
using oracle::q;

namespace {

Polynomial staircase_printed(int n) {
    switch (n) {
        case 1: return {1};
        case 2: return {1, 1};
        case 3: return {2, 3, q(1, 2)};
        case 4: return {5, 11, 4, q(1, 3)};
        case 5: return {16, 45, q(49, 2), q(25, 6), q(5, 24)};
        default: return {61, 211, 154, q(119, 3), 4, q(2, 15)};
    }
}

}  // namespace

TEST_SUITE("companion-poly") {

TEST_CASE("counters along attached paths") {
    for (int j = 0; j <= 5; ++j) {
        auto c = counters_along_path(oracle::path(j + 1), 0, 6);
        for (int i = 0; i <= 6; ++i) CHECK(c[static_cast<std::size_t>(i)] == oracle::choose(i + j, i));
        auto e = counters_along_path(SimpleDigraph(j + 1, {}), j, 6);
        for (int i = 0; i <= 6; ++i)
            CHECK(e[static_cast<std::size_t>(i)] == oracle::fact(i + j + 1) / oracle::fact(i + 1));
    }
    CHECK(counters_along_path(oracle::staircase(2), 0, 1)[1] == 2);
    CHECK(count_bruteforce(SimpleDigraph(3, {{0, 1}, {0, 2}})) == 2);
}

TEST_CASE("printed companion polynomials") {
    auto p2 = oracle::path(2);
    CHECK(companion_from_counters(p2, 1).poly == Polynomial{1});
    CHECK(companion_from_counters(p2, 0).poly == Polynomial{1, 1});
    auto g = companion_from_counters(oracle::two_row(2, 3), 1);
    CHECK(g.poly == Polynomial{5, 13, q(11, 2), q(1, 2)});
    CHECK(g.counters.size() == 10);
    CHECK(g.counters[0] == 5);
    for (int n = 1; n <= 6; ++n) {
        CHECK(companion_by_recurrence(oracle::staircase(n), 0) == staircase_printed(n));
        CHECK(companion_from_counters(oracle::staircase(n), 0).poly == staircase_printed(n));
    }
    CHECK(companion_by_recurrence(SimpleDigraph(3, {}), 1) == Polynomial{6, 6, 1});
    CHECK(companion_from_counters(SimpleDigraph(2, {{0, 1}, {1, 0}}), 0).poly.is_zero());
}

TEST_CASE("dual companion") {
    auto p2 = oracle::path(2);
    CHECK(companion_dual(p2, 0) == Polynomial{1});
    CHECK(companion_from_counters(p2, 0, true).poly == Polynomial{1});
    for (int n = 1; n <= 5; ++n) {
        SimpleDigraph e(n, {});
        CHECK(companion_dual(e, 0) == companion_by_recurrence(e, 0));
    }
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        auto d = oracle::random_dag(rng, 1 + t % 6, 0.4);
        int v = t % d.order();
        auto dual = companion_dual(d, v);
        CHECK(dual(0) == Rational(count(d)));
        CHECK(dual == companion_from_counters(d, v, true).poly);
    }
}

TEST_CASE("sigma of G_{-1}") {
    auto p3 = oracle::path(3);
    CHECK(sigma_minus_one(p3, 2) == 1);
    CHECK(sigma_minus_one(p3, 0) == 0);
    CHECK(sigma_minus_one(SimpleDigraph(3, {}), 0) == 2);
}

TEST_CASE("two routes agree on random acyclic digraphs") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 120; ++t) {
        int n = 1 + t % 7;
        auto d = oracle::random_dag(rng, n, 0.3);
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        auto r = companion_from_counters(d, v);
        auto rec = companion_by_recurrence(d, v);
        CHECK(r.poly == rec);
        CHECK(rec.degree() <= n - 1);
        CHECK(rec(0) == Rational(count(d)));
        // the counter series times exp(-X) truncates to the companion
        auto prod = series_from_counters(r.counters) * exp_series(-1, r.counters.size() - 1);
        CHECK(prod == poly_to_series(rec, r.counters.size() - 1));
    }
}

TEST_CASE("Laguerre identifications") {
    for (int j = 0; j <= 12; ++j)
        CHECK(companion_by_recurrence(oracle::path(j + 1), 0) == laguerre(j).compose_neg());
    for (int j = 0; j <= 10; ++j) {
        auto t = companion_by_recurrence(SimpleDigraph(j + 1, {}), 0);
        for (int k = 0; k <= j; ++k)
            CHECK(t.coeff(static_cast<std::size_t>(k)) ==
                  Rational(oracle::choose(j, k) * oracle::choose(j + 1, k + 1) * oracle::fact(j - k)));
        CHECK(t.compose_neg() == Rational(oracle::fact(j)) * generalized_laguerre(j, 1));
    }
    std::vector<std::vector<int>> trees{{-1, 0, 0}, {-1, 0, 0, 1, 1}, {-1, 0, 1, 1, 0, 4, 4}, {-1, 0, 0, 0, 1, 2, 3, 3}};
    for (const auto& p : trees) {
        auto d = make_family(RootedTreeFamily{p});
        CHECK(companion_by_recurrence(d, 0) ==
              Rational(tree_counter(p)) * laguerre(d.order() - 1).compose_neg());
    }
}

TEST_CASE("two-row recurrence") {
    CHECK(two_row_companion(2, 3, 2) == Polynomial{5, 13, q(11, 2), q(1, 2)});
    CHECK(two_row_companion(2, 2, 2) == Polynomial{2, 3, q(1, 2)});
    CHECK(two_row_companion(0, 2, 2) == Polynomial{1});
    CHECK_THROWS_AS(two_row_companion(3, 2, 1), DomainError);
    CHECK_THROWS_AS(two_row_companion(1, 2, 3), DomainError);
    for (int r = 1; r <= 4; ++r)
        for (int n2 = r; n2 <= 6; ++n2)
            for (int n1 = 0; n1 <= n2; ++n1) {
                CAPTURE(n1);
                CAPTURE(n2);
                CAPTURE(r);
                auto dec = two_row_decomposition(n1, n2, r);
                CHECK(dec.f[0] == 1);
                CHECK(dec.f.size() == static_cast<std::size_t>(std::min(n1, r - 1) + 1));
                CHECK(two_row_companion(n1, n2, r) == companion_by_recurrence(oracle::two_row(n1, n2), r - 1));
            }
    for (int n2 = 2; n2 <= 7; ++n2)
        for (int n1 = 0; n1 <= n2; ++n1) CHECK(two_row_closed_form_r2(n1, n2) == two_row_companion(n1, n2, 2));
    CHECK(two_row_closed_form_r3(0, 3) == Polynomial{1});
    CHECK(two_row_closed_form_r3(0, 4) == Polynomial{1, 1});
    CHECK(two_row_closed_form_r3(1, 3) == Polynomial{3, 1});
    int checked = 0;
    for (int n2 = 3; n2 <= 7; ++n2)
        for (int n1 = 0; n1 <= n2; ++n1) {
            Polynomial closed;
            try {
                closed = two_row_closed_form_r3(n1, n2);
            } catch (const DomainError&) {
                continue;
            }
            CHECK(closed == two_row_companion(n1, n2, 3));
            ++checked;
        }
    CHECK(checked >= 25);
}

TEST_CASE("staircase data") {
    auto z = oracle::zigzag(24);
    auto s = [&](int k) { return Rational(z[static_cast<std::size_t>(k)]); };
    std::vector<BigInt> i2{0, 0, 0, 1, 8, 49, 308, 2031, 14352};
    for (int n = 0; n <= 8; ++n) CHECK(staircase_data(n, 2).s_gen[2] == i2[static_cast<std::size_t>(n)]);
    CHECK(staircase_data(6, 5).s_gen[5] == 16);
    CHECK(staircase_data(5, 4).g == std::vector<Rational>{16, q(19, 4), q(5, 6), q(1, 12), 0});
    for (int n = 0; n <= 12; ++n) {
        auto d = staircase_data(n, 5);
        CHECK(d.a[0] == s(n));
        for (int i = 0; i <= 5; ++i) {
            CHECK(Rational(d.s_gen[static_cast<std::size_t>(i)]) ==
                  Rational(d.a[static_cast<std::size_t>(i)] * Rational(oracle::fact(i))));
            // closed form for f(n, i), i >= 1
            if (i >= 1) {
                Rational f = (i / 2) % 2 ? Rational(-s(n + i)) : s(n + i);
                for (int j = 0; j < i / 2; ++j) {
                    Rational term = Rational(oracle::choose(n + i, i - 2 * j - 1)) * s(n + 2 * j + 1);
                    f += j % 2 ? Rational(-term) : term;
                }
                CHECK(d.f_row[static_cast<std::size_t>(i)] == f);
            }
        }
        // a_{n,i} closed forms for i <= 5
        Rational N = n;
        std::vector<Rational> acl{
            s(n),
            s(n + 1) - s(n),
            q(1, 2) * (s(n) + N * s(n + 1) - s(n + 2)),
            q(1, 12) * ((N * N - N) * s(n + 1) - 2 * s(n) + 6 * s(n + 2) - 2 * s(n + 3)),
            q(1, 144) * ((N * N * N - 3 * N * N + 2 * N) * s(n + 1) + 6 * s(n) - 36 * s(n + 2) - 6 * N * s(n + 3) +
                         6 * s(n + 4)),
            q(1, 2880) * ((12 * N - 12 * N * N) * s(n + 3) + (N * N * N * N - 6 * N * N * N + 11 * N * N - 6 * N) * s(n + 1) -
                          24 * s(n) + 240 * s(n + 2) - 120 * s(n + 4) + 24 * s(n + 5))};
        for (int i = 0; i <= 5; ++i) CHECK(d.a[static_cast<std::size_t>(i)] == acl[static_cast<std::size_t>(i)]);
    }
    for (int n = 0; n <= 6; ++n)
        for (int i = 0; n + i <= 8; ++i) {
            BigInt direct = n == 0 ? BigInt(1) : count(attach_path(oracle::staircase(n), 0, i));
            CHECK(staircase_f(n, i) == Rational(direct));
        }
}

}
