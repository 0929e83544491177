#include "displab/strict_count.hpp"

#include <algorithm>
#include <numeric>

#include "displab/combinatorics.hpp"
#include "displab/error.hpp"

namespace displab {

CounterTable::CounterTable(const SimpleDigraph& d) : out_(d.out_masks()), adj_(out_) {
    auto in = d.in_masks();
    for (std::size_t v = 0; v < adj_.size(); ++v) adj_[v] |= in[v];
}

std::vector<VertexSet> CounterTable::split(VertexSet s) const {
    std::vector<VertexSet> parts;
    std::uint64_t rest = s.bits();
    while (rest) {
        std::uint64_t comp = rest & -rest, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
            next &= rest & ~comp;
            comp |= next;
            frontier = next;
        }
        parts.emplace_back(comp);
        rest &= ~comp;
    }
    return parts;
}

const BigInt& CounterTable::sigma(VertexSet s) {
    if (auto it = memo_.find(s.bits()); it != memo_.end()) return it->second;
    BigInt value;
    if (s.size() <= 1) {
        value = 1;
    } else if (auto parts = split(s); parts.size() > 1) {
        std::vector<long> sizes;
        value = 1;
        for (VertexSet p : parts) {
            sizes.push_back(p.size());
            value *= sigma(p);
        }
        value *= multinomial(sizes);
    } else {
        value = 0;
        s.for_each([&](int u) {
            if ((out_[static_cast<std::size_t>(u)] & s.bits()) == 0) value += sigma(s.without(u));
        });
    }
    return memo_.emplace(s.bits(), std::move(value)).first->second;
}

bool is_disposition(const SimpleDigraph& d, const Disposition& f) {
    const auto n = static_cast<std::size_t>(d.order());
    if (f.mapping.size() != n) return false;
    std::vector<char> used(n + 1, 0);
    for (int x : f.mapping) {
        if (x < 1 || static_cast<std::size_t>(x) > n || used[static_cast<std::size_t>(x)]) return false;
        used[static_cast<std::size_t>(x)] = 1;
    }
    for (auto [u, v] : d.arcs())
        if (f.mapping[static_cast<std::size_t>(u)] <= f.mapping[static_cast<std::size_t>(v)]) return false;
    return !d.had_loop();
}

BigInt count_bruteforce(const SimpleDigraph& d) {
    if (d.order() > kBruteforceMaxOrder) throw SizeError("count_bruteforce is limited to 9 vertices");
    if (d.had_loop()) return 0;
    Disposition f;
    f.mapping.resize(static_cast<std::size_t>(d.order()));
    std::iota(f.mapping.begin(), f.mapping.end(), 1);
    unsigned long hits = 0;
    do {
        bool ok = true;
        for (auto [u, v] : d.arcs())
            if (f.mapping[static_cast<std::size_t>(u)] <= f.mapping[static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
        hits += ok;
    } while (std::next_permutation(f.mapping.begin(), f.mapping.end()));
    return BigInt(hits);
}

BigInt count(const SimpleDigraph& d) {
    require_subset_order(d.order(), "count");
    if (d.had_loop() || !is_acyclic(d)) return 0;
    CounterTable table(d);
    return table.sigma(VertexSet::full(d.order()));
}

std::vector<Disposition> enumerate_dispositions(const SimpleDigraph& d, std::size_t cap) {
    if (d.order() > kEnumerateMaxOrder) throw SizeError("enumerate_dispositions is limited to 12 vertices");
    BigInt total = count(d);
    if (total > BigInt(static_cast<unsigned long>(cap)))
        throw SizeError("disposition count " + to_string(total) + " exceeds the cap " + std::to_string(cap));
    std::vector<Disposition> out;
    if (total == 0) return out;
    auto in = d.in_masks();
    Disposition cur;
    cur.mapping.assign(static_cast<std::size_t>(d.order()), 0);
    auto rec = [&](auto&& self, VertexSet rest) -> void {
        if (rest.empty()) {
            out.push_back(cur);
            return;
        }
        int label = rest.size();
        rest.for_each([&](int v) {
            if ((in[static_cast<std::size_t>(v)] & rest.bits()) != 0) return;
            cur.mapping[static_cast<std::size_t>(v)] = label;
            self(self, rest.without(v));
        });
    };
    rec(rec, VertexSet::full(d.order()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace displab
