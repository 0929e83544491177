#include "displab/digraph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "displab/error.hpp"

namespace displab {

VertexSet VertexSet::full(int n) {
    if (n <= 0) return VertexSet();
    if (n >= 64) return VertexSet(~std::uint64_t{0});
    return VertexSet((std::uint64_t{1} << n) - 1);
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

void require_subset_order(int n, const char* what) {
    if (n > kMaxSubsetOrder)
        throw SizeError(std::string(what) + ": order " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kMaxSubsetOrder) + " vertices");
}

Multidigraph::Multidigraph(int n) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
}

Multidigraph::Multidigraph(int n, const std::vector<std::pair<int, int>>& arcs) : Multidigraph(n) {
    for (auto [u, v] : arcs) add_arc(u, v);
}

void Multidigraph::add_arc(int u, int v, int multiplicity) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw DomainError("arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                          std::to_string(n_));
    if (multiplicity <= 0) throw DomainError("arc multiplicity must be positive");
    arcs_[{u, v}] += multiplicity;
}

SimpleDigraph::SimpleDigraph(int n, std::vector<std::pair<int, int>> arcs, bool had_loop)
    : n_(n), arcs_(std::move(arcs)), had_loop_(had_loop) {
    if (n < 0) throw DomainError("negative vertex count");
    for (auto [u, v] : arcs_) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("arc endpoint out of range");
        if (u == v) throw DomainError("simple digraphs carry no loops");
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    out_.assign(static_cast<std::size_t>(n), {});
    in_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : arcs_) {
        out_[static_cast<std::size_t>(u)].push_back(v);
        in_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& l : in_) std::sort(l.begin(), l.end());
}

bool SimpleDigraph::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::pair{u, v});
}

std::vector<std::uint64_t> SimpleDigraph::out_masks() const {
    require_subset_order(n_, "bitmask adjacency");
    std::vector<std::uint64_t> m(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : arcs_) m[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    return m;
}

std::vector<std::uint64_t> SimpleDigraph::in_masks() const {
    require_subset_order(n_, "bitmask adjacency");
    std::vector<std::uint64_t> m(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : arcs_) m[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    return m;
}

SimpleDigraph normalize(const Multidigraph& g) {
    std::vector<std::pair<int, int>> arcs;
    bool loop = false;
    for (const auto& [arc, mult] : g.arcs()) {
        if (arc.first == arc.second)
            loop = true;
        else
            arcs.push_back(arc);
    }
    return SimpleDigraph(g.order(), std::move(arcs), loop);
}

SimpleDigraph reverse(const SimpleDigraph& d) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.arc_count());
    for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
    return SimpleDigraph(d.order(), std::move(arcs), d.had_loop());
}

SimpleDigraph induced_subgraph(const SimpleDigraph& d, VertexSet keep) {
    std::vector<int> index(static_cast<std::size_t>(d.order()), -1);
    int m = 0;
    for (int v = 0; v < d.order(); ++v)
        if (v < VertexSet::kCapacity && keep.contains(v)) index[static_cast<std::size_t>(v)] = m++;
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : d.arcs()) {
        int a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) arcs.emplace_back(a, b);
    }
    return SimpleDigraph(m, std::move(arcs), d.had_loop());
}

std::pair<VertexSet, VertexSet> sinks_and_sources(const SimpleDigraph& d) {
    require_subset_order(d.order(), "sinks_and_sources");
    VertexSet mins, maxs;
    for (int v = 0; v < d.order(); ++v) {
        if (d.out_neighbors(v).empty()) mins = mins.with(v);
        if (d.in_neighbors(v).empty()) maxs = maxs.with(v);
    }
    return {mins, maxs};
}

std::vector<int> strong_component_ids(const SimpleDigraph& d) {
    // Iterative Tarjan, then renumber components by their smallest vertex.
    const int n = d.order();
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        comp(static_cast<std::size_t>(n), -1);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0, ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, next] = call.back();
            auto sv = static_cast<std::size_t>(v);
            if (next == 0 && index[sv] < 0) {
                index[sv] = low[sv] = counter++;
                stack.push_back(v);
                on_stack[sv] = 1;
            }
            const auto& out = d.out_neighbors(v);
            if (next < out.size()) {
                int w = out[next++];
                auto sw = static_cast<std::size_t>(w);
                if (index[sw] < 0)
                    call.emplace_back(w, 0);
                else if (on_stack[sw])
                    low[sv] = std::min(low[sv], index[sw]);
                continue;
            }
            if (low[sv] == index[sv]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp[static_cast<std::size_t>(w)] = ncomp;
                } while (w != v);
                ++ncomp;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) {
                auto sp = static_cast<std::size_t>(call.back().first);
                low[sp] = std::min(low[sp], low[static_cast<std::size_t>(done)]);
            }
        }
    }
    std::vector<int> relabel(static_cast<std::size_t>(ncomp), -1);
    int next_id = 0;
    for (int v = 0; v < n; ++v) {
        int& r = relabel[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        if (r < 0) r = next_id++;
        comp[static_cast<std::size_t>(v)] = r;
    }
    return comp;
}

SimpleDigraph condense(const SimpleDigraph& d) {
    auto comp = strong_component_ids(d);
    int m = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : d.arcs()) {
        int a = comp[static_cast<std::size_t>(u)], b = comp[static_cast<std::size_t>(v)];
        if (a != b) arcs.emplace_back(a, b);
    }
    return SimpleDigraph(m, std::move(arcs), d.had_loop());
}

std::vector<VertexSet> underlying_components(const SimpleDigraph& d) {
    require_subset_order(d.order(), "underlying_components");
    const int n = d.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (auto [u, v] : d.arcs()) {
        int a = find(u), b = find(v);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<VertexSet> out;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        int& s = slot[static_cast<std::size_t>(r)];
        if (s < 0) {
            s = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(s)] = out[static_cast<std::size_t>(s)].with(v);
    }
    return out;
}

SimpleDigraph attach_path(const SimpleDigraph& d, int v, int length, bool reversed) {
    if (v < 0 || v >= d.order()) throw DomainError("attach_path: vertex out of range");
    if (length < 0) throw DomainError("attach_path: negative length");
    if (length == 0) return d;
    std::vector<std::pair<int, int>> arcs = d.arcs();
    int prev = v;
    for (int k = 0; k < length; ++k) {
        int z = d.order() + k;
        if (reversed)
            arcs.emplace_back(z, prev);
        else
            arcs.emplace_back(prev, z);
        prev = z;
    }
    return SimpleDigraph(d.order() + length, std::move(arcs), d.had_loop());
}

bool is_acyclic(const SimpleDigraph& d) {
    std::vector<int> indeg(static_cast<std::size_t>(d.order()), 0);
    for (auto [u, v] : d.arcs()) ++indeg[static_cast<std::size_t>(v)];
    std::vector<int> ready;
    for (int v = 0; v < d.order(); ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int w : d.out_neighbors(v))
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
    return seen == d.order();
}

Multidigraph parse_digraph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<Multidigraph> g;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("line " + std::to_string(lineno) + ": " + why);
        };
        if (!g) {
            long n;
            if (first != "n" || !(ls >> n) || n < 0) fail("expected header \"n <count>\"");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after header");
            g.emplace(static_cast<int>(n));
            continue;
        }
        long u, v;
        std::istringstream all(line);
        std::string extra;
        if (!(all >> u >> v) || (all >> extra)) fail("expected \"u v\"");
        if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) fail("vertex index out of range");
        g->add_arc(static_cast<int>(u), static_cast<int>(v));
    }
    if (!g) throw ParseError("missing header \"n <count>\"");
    return *g;
}

Multidigraph parse_digraph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("digraph JSON needs an integer \"n\"");
    long n = j["n"].get<long>();
    if (n < 0) throw ParseError("negative vertex count");
    Multidigraph g(static_cast<int>(n));
    if (j.contains("arcs")) {
        if (!j["arcs"].is_array()) throw ParseError("\"arcs\" must be an array");
        for (const auto& a : j["arcs"]) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
                throw ParseError("each arc must be a pair of integers");
            long u = a[0].get<long>(), v = a[1].get<long>();
            if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("arc index out of range");
            g.add_arc(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return g;
}

std::string to_text(const SimpleDigraph& d) {
    std::ostringstream out;
    out << "n " << d.order() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_json(const SimpleDigraph& d) {
    nlohmann::json j;
    j["n"] = d.order();
    j["arcs"] = nlohmann::json::array();
    for (auto [u, v] : d.arcs()) j["arcs"].push_back({u, v});
    return j.dump();
}

}  // namespace displab
