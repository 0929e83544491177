#pragma once

#include <string>
#include <variant>
#include <vector>

#include "displab/digraph.hpp"
#include "displab/rational.hpp"

namespace displab {

struct DispositionalRow {
    int len = 0;
    int shift = 0;
    friend bool operator==(const DispositionalRow&, const DispositionalRow&) = default;
};

// Rows top to bottom; rows[0].shift must be 0. Row i occupies the absolute
// columns start_i .. start_i + len_i - 1 with start_i the running sum of shifts.
struct DispositionalSpec {
    std::vector<DispositionalRow> rows;
    int order() const;
    friend bool operator==(const DispositionalSpec&, const DispositionalSpec&) = default;
};

struct PathFamily { int n = 0; };
struct EmptyFamily { int n = 0; };
// Centre 0 and leaves 1..n-1; out_arcs puts the arcs centre -> leaf.
struct StarFamily { int n = 0; bool out_arcs = true; };
struct StaircaseFamily { int n = 0; };
// Complete q-ary tree with `level` levels, arcs from parent to child.
struct QaryLevelFamily { int q = 2; int level = 1; };
// v_1..v_{n2} on the top row (indices 0..n2-1), u_1..u_{n1} below (n2..).
struct TwoRowFamily { int n1 = 0; int n2 = 0; };
struct DispositionalFamily { DispositionalSpec spec; };
// parent[root] = -1; arcs parent -> child.
struct RootedTreeFamily { std::vector<int> parent; };

using FamilySpec = std::variant<PathFamily, EmptyFamily, StarFamily, StaircaseFamily, QaryLevelFamily, TwoRowFamily,
                                DispositionalFamily, RootedTreeFamily>;

// Throws DomainError on an invalid spec.
SimpleDigraph make_family(const FamilySpec& spec);
DispositionalSpec staircase_spec(int n);

// "path:6", "empty:4", "star:5[,in]", "staircase:7", "qary:2,3", "tworow:3,4",
// "tree:-1,0,0,1", "disp:2,0;2,-1". ParseError on malformed input.
FamilySpec parse_family(const std::string& text);
std::string family_name(const FamilySpec& spec);

// "vK" / "uK" for two-row digraphs, "vK" for paths and staircases, or a plain
// 0-based index for anything.
int resolve_vertex(const FamilySpec& spec, const std::string& label);

DispositionalSpec parse_dispositional_json(const std::string& text);
std::string to_json(const DispositionalSpec& spec);

// Euler zigzag numbers through the binomial recurrence; memo shared by the process.
BigInt staircase_counter(int n);
BigInt tree_counter(const std::vector<int>& parent);
BigInt qary_level_counter(int q, int level);
// C(n1+n2, n1) - C(n1+n2, n1-1).
BigInt two_row_counter(int n1, int n2);
bool dispositional_connected(const DispositionalSpec& spec);

}  // namespace displab
