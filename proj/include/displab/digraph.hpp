#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace displab {

// Subset of 0..63 stored as a bitmask. Algorithms keyed on vertex subsets
// require order <= kMaxSubsetOrder.
class VertexSet {
public:
    static constexpr int kCapacity = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    static VertexSet full(int n);
    static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    bool contains(int v) const { return (bits_ >> v) & 1U; }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    // Smallest member; undefined on the empty set.
    int first() const { return std::countr_zero(bits_); }

    VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    std::vector<int> members() const;

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet a, VertexSet b) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
    }

private:
    std::uint64_t bits_ = 0;
};

inline constexpr int kMaxSubsetOrder = 63;

// Throws SizeError when n exceeds kMaxSubsetOrder.
void require_subset_order(int n, const char* what);

// Vertices 0..n-1; arcs may repeat and may be loops.
class Multidigraph {
public:
    explicit Multidigraph(int n = 0);
    Multidigraph(int n, const std::vector<std::pair<int, int>>& arcs);

    void add_arc(int u, int v, int multiplicity = 1);
    int order() const { return n_; }
    const std::map<std::pair<int, int>, int>& arcs() const { return arcs_; }

private:
    int n_;
    std::map<std::pair<int, int>, int> arcs_;
};

// Loop-free digraph without parallel arcs. `had_loop` records that the
// multidigraph it was normalized from carried a loop, which forces a zero
// strict counter.
class SimpleDigraph {
public:
    SimpleDigraph() = default;
    // Throws DomainError on loops or out-of-range endpoints; duplicates collapse.
    SimpleDigraph(int n, std::vector<std::pair<int, int>> arcs, bool had_loop = false);

    int order() const { return n_; }
    // Sorted, duplicate-free.
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    std::size_t arc_count() const { return arcs_.size(); }
    bool had_loop() const { return had_loop_; }
    bool has_arc(int u, int v) const;

    const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[static_cast<std::size_t>(v)]; }

    // Bitmask adjacency; requires order <= kMaxSubsetOrder.
    std::vector<std::uint64_t> out_masks() const;
    std::vector<std::uint64_t> in_masks() const;

    friend bool operator==(const SimpleDigraph& a, const SimpleDigraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.had_loop_ == b.had_loop_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    bool had_loop_ = false;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

SimpleDigraph normalize(const Multidigraph& g);
SimpleDigraph reverse(const SimpleDigraph& d);
// Kept vertices are renumbered in increasing original order.
SimpleDigraph induced_subgraph(const SimpleDigraph& d, VertexSet keep);
// {min points (out-degree 0), max points (in-degree 0)}.
std::pair<VertexSet, VertexSet> sinks_and_sources(const SimpleDigraph& d);
// Strong-component quotient. Components are numbered by the order in which
// their smallest vertex appears in 0..n-1.
SimpleDigraph condense(const SimpleDigraph& d);
// Component index of every vertex under the same numbering as condense().
std::vector<int> strong_component_ids(const SimpleDigraph& d);
// Weakly connected components ordered by smallest vertex.
std::vector<VertexSet> underlying_components(const SimpleDigraph& d);
// Appends i vertices z_1..z_i. Forward: v -> z_1 -> ... -> z_i.
// Reversed: z_i -> ... -> z_1 -> v.
SimpleDigraph attach_path(const SimpleDigraph& d, int v, int length, bool reversed = false);
bool is_acyclic(const SimpleDigraph& d);

// Text format: "n <count>" then one "u v" per line; '#' starts a comment.
Multidigraph parse_digraph_text(const std::string& text);
// {"n": int, "arcs": [[u, v], ...]}
Multidigraph parse_digraph_json(const std::string& text);
std::string to_text(const SimpleDigraph& d);
std::string to_json(const SimpleDigraph& d);

}  // namespace displab
