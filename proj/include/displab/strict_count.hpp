#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "displab/digraph.hpp"
#include "displab/rational.hpp"

namespace displab {

// mapping[v] in 1..n, bijective, mapping[u] > mapping[v] along every arc (u, v).
struct Disposition {
    std::vector<int> mapping;
    friend auto operator<=>(const Disposition&, const Disposition&) = default;
};

// Counters of the induced subdigraphs of one fixed digraph, keyed by vertex set.
// Not thread-safe; meant to live for the duration of a single counting call.
class CounterTable {
public:
    explicit CounterTable(const SimpleDigraph& d);

    // sigma of the subdigraph induced by s; sigma(empty) = 1.
    const BigInt& sigma(VertexSet s);
    std::size_t memo_size() const { return memo_.size(); }

private:
    std::vector<VertexSet> split(VertexSet s) const;

    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> adj_;  // underlying undirected adjacency
    std::unordered_map<std::uint64_t, BigInt> memo_;
};

inline constexpr int kBruteforceMaxOrder = 9;
inline constexpr int kEnumerateMaxOrder = 12;
inline constexpr std::size_t kDefaultDispositionCap = 1'000'000;

// Direct check of all n! bijections. SizeError when n > 9.
BigInt count_bruteforce(const SimpleDigraph& d);

// Zero on loops or cycles; otherwise product over weak components, each by
// memoized sink removal, times the multinomial of component sizes.
BigInt count(const SimpleDigraph& d);

// All dispositions, sorted lexicographically by mapping. The largest label is
// placed on a max point and the rest recursively. SizeError when n > 12 or
// the count exceeds `cap`.
std::vector<Disposition> enumerate_dispositions(const SimpleDigraph& d, std::size_t cap = kDefaultDispositionCap);

bool is_disposition(const SimpleDigraph& d, const Disposition& f);

}  // namespace displab
