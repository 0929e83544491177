#pragma once

#include <vector>

#include "displab/digraph.hpp"
#include "displab/families.hpp"

namespace displab {

inline constexpr int kExtremalMaxOrder = 8;
inline constexpr int kIsoMaxOrder = 8;

// Every connected dispositional digraph of order m with rows of positive
// length, one spec per distinct arc set. Consecutive rows must share an
// absolute column, so the shift of row i lies in [-(a_i - 1), a_{i-1} - 1].
std::vector<DispositionalSpec> enumerate_connected_dispositional(int m);

struct SearchReport {
    int order = 0;
    BigInt max_counter;
    std::vector<DispositionalSpec> argmax_specs;
    std::size_t total_enumerated = 0;
    // Every argmax is isomorphic to the staircase of order m or its reverse.
    bool argmax_are_staircases = false;
};

// threads <= 1 runs inline; otherwise counters are evaluated by a worker pool.
SearchReport max_counter_search(int m, unsigned threads = 1);

// Arc-preserving bijection search with degree pruning. SizeError above order 8.
bool iso_check(const SimpleDigraph& a, const SimpleDigraph& b);

}  // namespace displab
