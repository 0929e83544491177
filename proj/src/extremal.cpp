#include "displab/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "displab/error.hpp"
#include "displab/strict_count.hpp"

namespace displab {

std::vector<DispositionalSpec> enumerate_connected_dispositional(int m) {
    if (m < 1 || m > kExtremalMaxOrder)
        throw SizeError("enumerate_connected_dispositional supports orders 1.." + std::to_string(kExtremalMaxOrder));
    std::vector<DispositionalSpec> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    DispositionalSpec cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            auto arcs = make_family(DispositionalFamily{cur}).arcs();
            if (seen.insert(arcs).second) out.push_back(cur);
            return;
        }
        for (int len = 1; len <= remaining; ++len) {
            if (cur.rows.empty()) {
                cur.rows.push_back({len, 0});
                self(self, remaining - len);
                cur.rows.pop_back();
                continue;
            }
            const int prev = cur.rows.back().len;
            for (int shift = -(len - 1); shift <= prev - 1; ++shift) {
                cur.rows.push_back({len, shift});
                self(self, remaining - len);
                cur.rows.pop_back();
            }
        }
    };
    rec(rec, m);
    return out;
}

SearchReport max_counter_search(int m, unsigned threads) {
    auto specs = enumerate_connected_dispositional(m);
    std::vector<BigInt> counts(specs.size());
    auto work = [&](std::size_t k) { counts[k] = count(make_family(DispositionalFamily{specs[k]})); };
    if (threads <= 1) {
        for (std::size_t k = 0; k < specs.size(); ++k) work(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < specs.size();) work(k);
            });
        for (auto& th : pool) th.join();
    }
    SearchReport r;
    r.order = m;
    r.total_enumerated = specs.size();
    r.max_counter = 0;
    for (std::size_t k = 0; k < specs.size(); ++k) {
        if (counts[k] > r.max_counter) {
            r.max_counter = counts[k];
            r.argmax_specs.clear();
        }
        if (counts[k] == r.max_counter) r.argmax_specs.push_back(specs[k]);
    }
    SimpleDigraph stair = make_family(StaircaseFamily{m}), rstair = reverse(stair);
    r.argmax_are_staircases = std::all_of(r.argmax_specs.begin(), r.argmax_specs.end(), [&](const auto& s) {
        auto d = make_family(DispositionalFamily{s});
        return iso_check(d, stair) || iso_check(d, rstair);
    });
    return r;
}

bool iso_check(const SimpleDigraph& a, const SimpleDigraph& b) {
    if (a.order() > kIsoMaxOrder || b.order() > kIsoMaxOrder)
        throw SizeError("iso_check supports orders up to " + std::to_string(kIsoMaxOrder));
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    const int n = a.order();
    auto degrees = [](const SimpleDigraph& d, int v) {
        return std::pair{d.out_neighbors(v).size(), d.in_neighbors(v).size()};
    };
    std::vector<std::pair<std::size_t, std::size_t>> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(degrees(a, v));
        db.push_back(degrees(b, v));
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || da[static_cast<std::size_t>(v)] != db[static_cast<std::size_t>(w)])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                int iu = image[static_cast<std::size_t>(u)];
                ok = a.has_arc(u, v) == b.has_arc(iu, w) && a.has_arc(v, u) == b.has_arc(w, iu);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, v + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace displab
