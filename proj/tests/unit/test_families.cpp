#include "doctest.h"
#include "displab/combinatorics.hpp"
#include "displab/error.hpp"
#include "displab/extremal.hpp"
#include "displab/families.hpp"
#include "displab/strict_count.hpp"
#include "oracles.hpp"

using namespace displab;

TEST_SUITE("families") {

TEST_CASE("constructors") {
    CHECK(make_family(StaircaseFamily{5}).arcs() == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}, {2, 3}, {4, 3}});
    for (int n = 0; n <= 10; ++n) CHECK(make_family(StaircaseFamily{n}) == oracle::staircase(n));
    auto t = make_family(TwoRowFamily{2, 3});
    CHECK(t.order() == 5);
    CHECK(t == oracle::two_row(2, 3));
    CHECK(make_family(PathFamily{4}) == oracle::path(4));
    CHECK(make_family(EmptyFamily{3}).arcs().empty());
    CHECK(make_family(QaryLevelFamily{2, 3}).order() == 7);
    CHECK_THROWS_AS(make_family(TwoRowFamily{3, 2}), DomainError);
    CHECK_THROWS_AS(make_family(RootedTreeFamily{{-1, 2, 1}}), DomainError);
    CHECK_THROWS_AS(make_family(DispositionalFamily{{{{2, 1}}}}), DomainError);
}

TEST_CASE("staircases as dispositional digraphs") {
    // Row-major labelling of the dispositional spec permutes the staircase
    // vertices, so the identification is up to isomorphism.
    for (int n = 1; n <= 8; ++n) {
        auto d = make_family(DispositionalFamily{staircase_spec(n)});
        CHECK(iso_check(d, oracle::staircase(n)));
        CHECK(count(d) == staircase_counter(n));
    }
    for (int n = 9; n <= 10; ++n)
        CHECK(count(make_family(DispositionalFamily{staircase_spec(n)})) == count(make_family(StaircaseFamily{n})));
    for (int k = 1; k <= 4; ++k) {
        DispositionalSpec s{{{2, 0}}};
        for (int j = 1; j < k; ++j) s.rows.push_back({2, -1});
        CHECK(s == staircase_spec(2 * k));
    }
}

TEST_CASE("zigzag counters") {
    auto z = oracle::zigzag(25);
    for (int n = 0; n < 25; ++n) CHECK(staircase_counter(n) == z[static_cast<std::size_t>(n)]);
    for (int n = 0; n <= 8; ++n) CHECK(count(oracle::staircase(n)) == staircase_counter(n));
    for (int n = 1; n <= 14; ++n) {
        BigInt sum = 0;
        for (int k = 0; k <= n; ++k) sum += binomial(n, k) * staircase_counter(k) * staircase_counter(n - k);
        CHECK(2 * staircase_counter(n + 1) == sum);
    }
    for (int j = 0; j <= 12; ++j)
        for (int i = 0; i <= j; ++i)
            CHECK(staircase_counter(j) <= binomial(j, i) * staircase_counter(i) * staircase_counter(j - i));
}

TEST_CASE("tree counters") {
    CHECK(tree_counter({-1, 0, 1, 2, 3}) == 1);
    CHECK(tree_counter({-1, 0, 0, 0, 0}) == 24);
    CHECK(tree_counter({-1, 0, 0}) == 2);
    CHECK(count(make_family(RootedTreeFamily{{-1, 0, 0}})) == 2);
    CHECK_THROWS_AS(tree_counter({1, 0}), DomainError);
    CHECK(qary_level_counter(2, 2) == 2);
    CHECK(qary_level_counter(2, 3) == 80);
    CHECK(qary_level_counter(3, 2) == 6);
    for (int q = 2; q <= 3; ++q)
        for (int l = 1; l <= 3; ++l) {
            auto d = make_family(QaryLevelFamily{q, l});
            if (d.order() <= 9) CHECK(count_bruteforce(d) == qary_level_counter(q, l));
            CHECK(count(d) == qary_level_counter(q, l));
        }
    std::vector<std::vector<int>> trees{{-1, 0, 0, 1, 1, 2}, {-1, 0, 1, 1, 3, 3, 0}, {-1, 0, 0, 0, 1, 1, 2, 6}};
    for (const auto& p : trees) CHECK(tree_counter(p) == count(make_family(RootedTreeFamily{p})));
}

TEST_CASE("two-row counters") {
    CHECK(two_row_counter(2, 3) == 5);
    CHECK(two_row_counter(2, 2) == 2);
    CHECK(two_row_counter(6, 6) == 132);
    for (int n2 = 0; n2 <= 5; ++n2)
        for (int n1 = 0; n1 <= n2; ++n1) CHECK(count(make_family(TwoRowFamily{n1, n2})) == two_row_counter(n1, n2));
}

TEST_CASE("closed forms agree with counting for small members") {
    for (int n = 0; n <= 7; ++n) {
        CHECK(count(make_family(PathFamily{n})) == 1);
        CHECK(count(make_family(EmptyFamily{n})) == factorial(n));
        CHECK(count(make_family(StaircaseFamily{n})) == staircase_counter(n));
        if (n >= 1) CHECK(count(make_family(StarFamily{n})) == factorial(n - 1));
    }
}

TEST_CASE("connectivity of dispositional specs") {
    CHECK(dispositional_connected(staircase_spec(5)));
    CHECK_FALSE(dispositional_connected({{{1, 0}, {1, 5}}}));
    DispositionalSpec e5{{{1, 0}, {1, 100}, {1, 100}, {1, 100}, {1, 100}}};
    CHECK_FALSE(dispositional_connected(e5));
    CHECK(count(make_family(DispositionalFamily{e5})) == 120);
}

TEST_CASE("family strings and vertex labels") {
    CHECK(family_name(parse_family("staircase:7")) == "staircase:7");
    CHECK(family_name(parse_family("tworow:3,4")) == "tworow:3,4");
    CHECK(family_name(parse_family("disp:2,0;2,-1")) == "disp:2,0;2,-1");
    CHECK(family_name(parse_family("star:5,in")) == "star:5,in");
    CHECK(std::get<PathFamily>(parse_family("path:6")).n == 6);
    CHECK_THROWS_AS(parse_family("path"), ParseError);
    CHECK_THROWS_AS(parse_family("tworow:4,3"), ParseError);
    CHECK_THROWS_AS(parse_family("blob:3"), ParseError);
    CHECK_THROWS_AS(parse_family("path:x"), ParseError);
    auto t = parse_family("tworow:2,3");
    CHECK(resolve_vertex(t, "v2") == 1);
    CHECK(resolve_vertex(t, "u1") == 3);
    CHECK(resolve_vertex(t, "4") == 4);
    CHECK_THROWS_AS(resolve_vertex(t, "u3"), ParseError);
    CHECK_THROWS_AS(resolve_vertex(parse_family("path:3"), "u1"), ParseError);
    auto spec = parse_dispositional_json(R"({"rows":[{"len":2,"shift":0},{"len":2,"shift":-1}]})");
    CHECK(spec == staircase_spec(4));
    CHECK(parse_dispositional_json(to_json(spec)) == spec);
    CHECK_THROWS_AS(parse_dispositional_json(R"({"rows":[{"len":2,"shift":1}]})"), ParseError);
}

}
