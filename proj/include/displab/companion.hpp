#pragma once

#include <vector>

#include "displab/digraph.hpp"
#include "displab/polynomial.hpp"

namespace displab {

struct CompanionResult {
    Polynomial poly;
    std::vector<BigInt> counters;  // sigma(G_i) for i = 0..horizon
    int vertex = 0;
    bool dual = false;
};

// sigma(attach_path(d, v, i, reversed)) for i = 0..horizon.
std::vector<BigInt> counters_along_path(const SimpleDigraph& d, int v, int horizon, bool reversed = false);

// Deconvolution of the counter series by exp(-X), horizon 2n-1. Throws
// ConsistencyError when any coefficient of degree n..2n-1 is nonzero. A cyclic
// digraph yields the zero polynomial.
CompanionResult companion_from_counters(const SimpleDigraph& d, int v, bool reversed = false);

// T' = sum over sinks w != v of (T_{G-w} + T'_{G-w}), T(0) = sigma(G).
// Memoized over vertex subsets; SizeError above kMaxRecurrenceOrder vertices.
inline constexpr int kMaxRecurrenceOrder = 24;
Polynomial companion_by_recurrence(const SimpleDigraph& d, int v);

// T*: the path is attached in reverse, which is the companion of reverse(d) at v.
Polynomial companion_dual(const SimpleDigraph& d, int v);

// sigma(G - v) if v is a sink, else 0.
BigInt sigma_minus_one(const SimpleDigraph& d, int v);

// f(n1, n2, r, i) for i = 0..min(n1, r-1); zero beyond.
struct TwoRowDecomposition {
    int n1 = 0, n2 = 0, r = 1;
    std::vector<Rational> f;
};

// DomainError unless 0 <= n1 <= n2 and 1 <= r <= n2.
TwoRowDecomposition two_row_decomposition(int n1, int n2, int r);
// Companion of the two-row digraph at v_r: sigma * sum_i f_i X^i (d^i L_N)(-X),
// N = n1 + n2 - r.
Polynomial two_row_companion(int n1, int n2, int r);
// Closed forms for r = 2 and r = 3, kept separate as validators.
Polynomial two_row_closed_form_r2(int n1, int n2);
Polynomial two_row_closed_form_r3(int n1, int n2);

struct StaircaseData {
    int n = 0;
    std::vector<Rational> f_row;  // f(n, i) = sigma(S_n + P_{i+1}), i = 0..horizon
    std::vector<Rational> a;      // coefficient of X^i in T_{S_n, v_1}
    std::vector<BigInt> s_gen;    // i! a_{n,i}
    std::vector<Rational> g;      // T = sum g_i X^i (d^i L_{n-1})(-X); empty for n = 0
    Polynomial companion() const;
};

// f(n, i) through the halving recurrence.
Rational staircase_f(int n, int i);
StaircaseData staircase_data(int n, int horizon);

}  // namespace displab
