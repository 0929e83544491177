#include "displab/nonstrict.hpp"

#include <map>

#include "displab/combinatorics.hpp"
#include "displab/error.hpp"

namespace displab {

namespace {

class NonstrictTable {
public:
    explicit NonstrictTable(const SimpleDigraph& d) : out_(d.out_masks()) {}

    BigInt inclusion_exclusion(VertexSet s, int i) {
        if (s.empty()) return 1;
        if (i <= 0) return 0;
        auto key = std::pair{s.bits(), i};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::uint64_t mins = 0;
        s.for_each([&](int v) {
            if ((out_[static_cast<std::size_t>(v)] & s.bits()) == 0) mins |= std::uint64_t{1} << v;
        });
        BigInt total = 0;
        for (int j = 1; j <= i; ++j)
            for (std::uint64_t t = mins; t; t = (t - 1) & mins) {
                BigInt term = inclusion_exclusion(VertexSet(s.bits() & ~t), j);
                if (std::popcount(t) % 2)
                    total += term;
                else
                    total -= term;
            }
        memo_.emplace(key, total);
        return total;
    }

    BigInt downset(VertexSet s, int i) {
        if (s.empty()) return 1;
        if (i <= 0) return 0;
        auto key = std::pair{s.bits(), i};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt total = 0;
        // D = vertices labelled 1; closed under out-arcs inside s.
        const std::uint64_t all = s.bits();
        for (std::uint64_t dmask = all;; dmask = (dmask - 1) & all) {
            bool closed = true;
            for (std::uint64_t b = dmask; b && closed; b &= b - 1)
                closed = (out_[static_cast<std::size_t>(std::countr_zero(b))] & all & ~dmask) == 0;
            if (closed) total += downset(VertexSet(all & ~dmask), i - 1);
            if (dmask == 0) break;
        }
        memo_.emplace(key, total);
        return total;
    }

private:
    std::vector<std::uint64_t> out_;
    std::map<std::pair<std::uint64_t, int>, BigInt> memo_;
};

}  // namespace

BigInt nonstrict_bruteforce(const SimpleDigraph& d, int i) {
    if (i < 0) throw DomainError("nonstrict size must be nonnegative");
    const int n = d.order();
    if (n == 0) return 1;
    if (i == 0) return 0;
    BigInt work = power(BigInt(i), static_cast<unsigned long>(n));
    if (work > BigInt(kNonstrictBruteforceBudget))
        throw SizeError("nonstrict_bruteforce: " + to_string(work) + " maps exceed the budget");
    std::vector<int> f(static_cast<std::size_t>(n), 1);
    unsigned long hits = 0;
    while (true) {
        bool ok = true;
        for (auto [u, v] : d.arcs())
            if (f[static_cast<std::size_t>(u)] < f[static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
        hits += ok;
        std::size_t k = 0;
        while (k < f.size() && f[k] == i) f[k++] = 1;
        if (k == f.size()) break;
        ++f[k];
    }
    return BigInt(hits);
}

BigInt nonstrict_count(const SimpleDigraph& d, int i, NonstrictMethod method) {
    if (i < 0) throw DomainError("nonstrict size must be nonnegative");
    SimpleDigraph c = condense(d);
    require_subset_order(c.order(), "nonstrict_count");
    auto comps = underlying_components(c);
    for (VertexSet comp : comps)
        if (comp.size() > kNonstrictMaxCondensedOrder)
            throw SizeError("nonstrict_count: condensed component of order " + std::to_string(comp.size()) +
                            " exceeds " + std::to_string(kNonstrictMaxCondensedOrder));
    NonstrictTable table(c);
    BigInt total = 1;
    for (VertexSet comp : comps)
        total *= method == NonstrictMethod::InclusionExclusion ? table.inclusion_exclusion(comp, i)
                                                               : table.downset(comp, i);
    return total;
}

BigInt nonstrict_closed(NonstrictFamily family, int i, int n1, int n2) {
    if (i < 1) throw DomainError("nonstrict_closed needs i >= 1");
    switch (family) {
        case NonstrictFamily::Path:
            if (n1 < 0) throw DomainError("negative order");
            return combinations_with_repetition(i, n1);
        case NonstrictFamily::Empty:
            if (n1 < 0) throw DomainError("negative order");
            return power(BigInt(i), static_cast<unsigned long>(n1));
        case NonstrictFamily::TwoRow: {
            if (n1 < 0 || n1 > n2) throw DomainError("two-row needs 0 <= n1 <= n2");
            Rational factor = 1 + make_rational(BigInt(n1) * (1 - i), BigInt(n2 + 1) * i);
            Rational v = factor * Rational(combinations_with_repetition(i, n1) * combinations_with_repetition(i, n2));
            if (!is_integer(v)) throw ConsistencyError("two-row non-strict closed form is not an integer");
            return v.get_num();
        }
    }
    throw DomainError("unknown family");
}

TruncatedSeries nonstrict_series_fixed_size(int j, std::size_t order) {
    if (j < 0) throw DomainError("negative size");
    std::vector<Rational> c;
    for (std::size_t k = 0; k <= order; ++k)
        c.push_back(Rational(binomial(j + static_cast<long>(k) - 1, static_cast<long>(k))) / Rational(factorial(static_cast<long>(k))));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries nonstrict_series_diagonal(std::size_t order) {
    std::vector<Rational> c{1};
    for (std::size_t k = 1; k <= order; ++k)
        c.push_back(Rational(binomial(2 * static_cast<long>(k) - 1, static_cast<long>(k))) / Rational(factorial(static_cast<long>(k))));
    return TruncatedSeries(std::move(c));
}

}  // namespace displab
