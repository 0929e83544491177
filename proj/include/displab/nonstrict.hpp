#pragma once

#include "displab/digraph.hpp"
#include "displab/series.hpp"

namespace displab {

inline constexpr unsigned long kNonstrictBruteforceBudget = 10'000'000;
inline constexpr int kNonstrictMaxCondensedOrder = 20;

// Maps V -> {1..i} with f(u) >= f(v) along arcs, checked one by one.
// SizeError when i^n exceeds the budget. Loops impose nothing.
BigInt nonstrict_bruteforce(const SimpleDigraph& d, int i);

enum class NonstrictMethod {
    InclusionExclusion,  // recurrence over nonempty sets of min points
    DownsetTransfer,     // peel the arc-closed set of vertices labelled 1
};

// Condenses strong components, multiplies over weak components and evaluates
// each with the chosen method. SizeError when a weak component of the
// condensation has more than kNonstrictMaxCondensedOrder vertices.
BigInt nonstrict_count(const SimpleDigraph& d, int i, NonstrictMethod method = NonstrictMethod::InclusionExclusion);

enum class NonstrictFamily { Path, Empty, TwoRow };
// Path: C(i+n-1, n); Empty: i^n; TwoRow(n1, n2):
// (1 + n1(1-i)/((n2+1)i)) CR(i,n1) CR(i,n2), which must be an integer.
BigInt nonstrict_closed(NonstrictFamily family, int i, int n1, int n2 = 0);

// Paths with a fixed number of values j: coefficients C(j+k-1, k)/k!.
TruncatedSeries nonstrict_series_fixed_size(int j, std::size_t order);
// Paths with as many values as vertices: coefficients C(2k-1, k)/k!, constant term 1.
TruncatedSeries nonstrict_series_diagonal(std::size_t order);

}  // namespace displab
