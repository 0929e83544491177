#include "displab/families.hpp"

#include <charconv>
#include <mutex>
#include <numeric>

#include "displab/combinatorics.hpp"
#include "displab/error.hpp"
#include "json.hpp"

namespace displab {

namespace {

using Arcs = std::vector<std::pair<int, int>>;

void require_nonnegative(int n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative order");
}

SimpleDigraph make_dispositional(const DispositionalSpec& spec) {
    if (!spec.rows.empty() && spec.rows.front().shift != 0) throw DomainError("first dispositional shift must be 0");
    Arcs arcs;
    int base = 0, start = 0, prev_base = 0, prev_start = 0, prev_len = 0;
    for (std::size_t r = 0; r < spec.rows.size(); ++r) {
        const auto& row = spec.rows[r];
        if (row.len < 0) throw DomainError("dispositional row length must be nonnegative");
        start += row.shift;
        for (int c = 0; c + 1 < row.len; ++c) arcs.emplace_back(base + c, base + c + 1);
        if (r > 0)
            for (int c = 0; c < row.len; ++c) {
                int col = start + c, above = col - prev_start;
                if (above >= 0 && above < prev_len) arcs.emplace_back(prev_base + above, base + c);
            }
        prev_base = base;
        prev_start = start;
        prev_len = row.len;
        base += row.len;
    }
    return SimpleDigraph(base, std::move(arcs));
}

SimpleDigraph make_tree(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    Arcs arcs;
    int roots = 0;
    for (int v = 0; v < n; ++v) {
        int p = parent[static_cast<std::size_t>(v)];
        if (p == -1) {
            ++roots;
            continue;
        }
        if (p < 0 || p >= n || p == v) throw DomainError("invalid parent index");
        arcs.emplace_back(p, v);
    }
    if (n > 0 && roots != 1) throw DomainError("a rooted tree needs exactly one root");
    SimpleDigraph d(n, std::move(arcs));
    if (!is_acyclic(d)) throw DomainError("parent array contains a cycle");
    return d;
}

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw ParseError("expected an integer, got \"" + std::string(s) + "\"");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) out.push_back(parse_int(t));
    return out;
}

}  // namespace

int DispositionalSpec::order() const {
    int m = 0;
    for (const auto& r : rows) m += r.len;
    return m;
}

DispositionalSpec staircase_spec(int n) {
    require_nonnegative(n, "staircase_spec");
    DispositionalSpec s;
    if (n == 0) return s;
    if (n % 2 == 1) {
        s.rows.push_back({1, 0});
        for (int k = 0; k < n / 2; ++k) s.rows.push_back({2, -1});
    } else {
        s.rows.push_back({2, 0});
        for (int k = 1; k < n / 2; ++k) s.rows.push_back({2, -1});
    }
    return s;
}

SimpleDigraph make_family(const FamilySpec& spec) {
    return std::visit(
        [](const auto& f) -> SimpleDigraph {
            using T = std::decay_t<decltype(f)>;
            Arcs arcs;
            if constexpr (std::is_same_v<T, PathFamily>) {
                require_nonnegative(f.n, "path");
                for (int k = 0; k + 1 < f.n; ++k) arcs.emplace_back(k, k + 1);
                return SimpleDigraph(f.n, std::move(arcs));
            } else if constexpr (std::is_same_v<T, EmptyFamily>) {
                require_nonnegative(f.n, "empty");
                return SimpleDigraph(f.n, {});
            } else if constexpr (std::is_same_v<T, StarFamily>) {
                require_nonnegative(f.n, "star");
                for (int k = 1; k < f.n; ++k) arcs.push_back(f.out_arcs ? std::pair{0, k} : std::pair{k, 0});
                return SimpleDigraph(f.n, std::move(arcs));
            } else if constexpr (std::is_same_v<T, StaircaseFamily>) {
                require_nonnegative(f.n, "staircase");
                // v_k is index k-1; v_k -> v_{k+1} for odd k, v_{k+1} -> v_k for even k.
                for (int k = 1; k < f.n; ++k) arcs.push_back(k % 2 == 1 ? std::pair{k - 1, k} : std::pair{k, k - 1});
                return SimpleDigraph(f.n, std::move(arcs));
            } else if constexpr (std::is_same_v<T, QaryLevelFamily>) {
                if (f.q < 2 || f.level < 1) throw DomainError("q-ary tree needs q >= 2 and level >= 1");
                std::vector<int> parent{-1};
                std::size_t level_start = 0, level_size = 1;
                for (int l = 1; l < f.level; ++l) {
                    for (std::size_t p = level_start; p < level_start + level_size; ++p)
                        for (int c = 0; c < f.q; ++c) parent.push_back(static_cast<int>(p));
                    level_start += level_size;
                    level_size *= static_cast<std::size_t>(f.q);
                    if (parent.size() > 4096) throw DomainError("q-ary tree too large to build");
                }
                return make_tree(parent);
            } else if constexpr (std::is_same_v<T, TwoRowFamily>) {
                if (f.n1 < 0 || f.n1 > f.n2) throw DomainError("two-row digraph needs 0 <= n1 <= n2");
                return make_dispositional(DispositionalSpec{{{f.n2, 0}, {f.n1, 0}}});
            } else if constexpr (std::is_same_v<T, DispositionalFamily>) {
                return make_dispositional(f.spec);
            } else {
                return make_tree(f.parent);
            }
        },
        spec);
}

FamilySpec parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("family must look like name:params, got \"" + text + "\"");
    std::string name = text.substr(0, colon), args = text.substr(colon + 1);
    auto one = [&]() {
        auto v = parse_ints(args);
        if (v.size() != 1) throw ParseError(name + " takes one parameter");
        if (v[0] < 0) throw ParseError(name + " needs a nonnegative order");
        return v[0];
    };
    if (name == "path") return PathFamily{one()};
    if (name == "empty") return EmptyFamily{one()};
    if (name == "staircase") return StaircaseFamily{one()};
    if (name == "star") {
        auto parts = split(args, ',');
        if (parts.size() == 2 && (parts[1] == "in" || parts[1] == "out")) {
            int n = parse_int(parts[0]);
            if (n < 0) throw ParseError("star needs a nonnegative order");
            return StarFamily{n, parts[1] == "out"};
        }
        return StarFamily{one(), true};
    }
    if (name == "qary") {
        auto v = parse_ints(args);
        if (v.size() != 2 || v[0] < 2 || v[1] < 1) throw ParseError("qary takes q>=2,level>=1");
        return QaryLevelFamily{v[0], v[1]};
    }
    if (name == "tworow") {
        auto v = parse_ints(args);
        if (v.size() != 2 || v[0] < 0 || v[0] > v[1]) throw ParseError("tworow takes n1,n2 with 0<=n1<=n2");
        return TwoRowFamily{v[0], v[1]};
    }
    if (name == "tree") return RootedTreeFamily{parse_ints(args)};
    if (name == "disp") {
        DispositionalSpec s;
        for (const auto& row : split(args, ';')) {
            auto v = parse_ints(row);
            if (v.size() != 2) throw ParseError("disp rows are len,shift");
            s.rows.push_back({v[0], v[1]});
        }
        if (s.rows.front().shift != 0) throw ParseError("first disp shift must be 0");
        return DispositionalFamily{s};
    }
    throw ParseError("unknown family \"" + name + "\"");
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            auto join = [](const std::vector<int>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
                return s;
            };
            if constexpr (std::is_same_v<T, PathFamily>) return "path:" + std::to_string(f.n);
            else if constexpr (std::is_same_v<T, EmptyFamily>) return "empty:" + std::to_string(f.n);
            else if constexpr (std::is_same_v<T, StarFamily>)
                return "star:" + std::to_string(f.n) + (f.out_arcs ? "" : ",in");
            else if constexpr (std::is_same_v<T, StaircaseFamily>) return "staircase:" + std::to_string(f.n);
            else if constexpr (std::is_same_v<T, QaryLevelFamily>)
                return "qary:" + std::to_string(f.q) + "," + std::to_string(f.level);
            else if constexpr (std::is_same_v<T, TwoRowFamily>)
                return "tworow:" + std::to_string(f.n1) + "," + std::to_string(f.n2);
            else if constexpr (std::is_same_v<T, DispositionalFamily>) {
                std::string s = "disp:";
                for (std::size_t i = 0; i < f.spec.rows.size(); ++i)
                    s += (i ? ";" : "") + std::to_string(f.spec.rows[i].len) + "," + std::to_string(f.spec.rows[i].shift);
                return s;
            } else
                return "tree:" + join(f.parent);
        },
        spec);
}

int resolve_vertex(const FamilySpec& spec, const std::string& label) {
    if (label.empty()) throw ParseError("empty vertex label");
    const int n = make_family(spec).order();
    int v;
    if (label[0] == 'v' || label[0] == 'u') {
        int k = parse_int(std::string_view(label).substr(1));
        if (k < 1) throw ParseError("vertex labels are 1-based");
        if (const auto* t = std::get_if<TwoRowFamily>(&spec)) {
            if (label[0] == 'v') {
                if (k > t->n2) throw ParseError("no vertex " + label);
                v = k - 1;
            } else {
                if (k > t->n1) throw ParseError("no vertex " + label);
                v = t->n2 + k - 1;
            }
        } else {
            if (label[0] == 'u') throw ParseError("u-labels exist only for two-row digraphs");
            v = k - 1;
        }
    } else {
        v = parse_int(label);
    }
    if (v < 0 || v >= n) throw ParseError("vertex " + label + " out of range");
    return v;
}

DispositionalSpec parse_dispositional_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw ParseError("dispositional JSON needs a \"rows\" array");
    DispositionalSpec s;
    for (const auto& r : j["rows"]) {
        if (!r.is_object() || !r.contains("len") || !r["len"].is_number_integer() ||
            (r.contains("shift") && !r["shift"].is_number_integer()))
            throw ParseError("each row needs integer \"len\" and \"shift\"");
        s.rows.push_back({r["len"].get<int>(), r.value("shift", 0)});
    }
    if (!s.rows.empty() && s.rows.front().shift != 0) throw ParseError("first shift must be 0");
    return s;
}

std::string to_json(const DispositionalSpec& spec) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : spec.rows) j["rows"].push_back({{"len", r.len}, {"shift", r.shift}});
    return j.dump();
}

BigInt staircase_counter(int n) {
    require_nonnegative(n, "staircase_counter");
    static std::mutex mu;
    static std::vector<BigInt> memo{1, 1};
    std::lock_guard lock(mu);
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        BigInt s = 0;
        for (int i = 1; i <= m / 2; ++i)
            s += binomial(m - 1, 2 * i - 1) * memo[static_cast<std::size_t>(2 * i - 1)] *
                 memo[static_cast<std::size_t>(m - 2 * i)];
        memo.push_back(s);
    }
    return memo[static_cast<std::size_t>(n)];
}

BigInt tree_counter(const std::vector<int>& parent) {
    SimpleDigraph d = make_tree(parent);
    const int n = d.order();
    if (n == 0) return 1;
    int root = static_cast<int>(std::find(parent.begin(), parent.end(), -1) - parent.begin());
    std::vector<long> size(static_cast<std::size_t>(n), 0);
    std::vector<BigInt> sigma(static_cast<std::size_t>(n));
    // post-order over an explicit stack
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [v, done] = stack.back();
        stack.pop_back();
        const auto& kids = d.out_neighbors(v);
        if (!done) {
            stack.emplace_back(v, true);
            for (int c : kids) stack.emplace_back(c, false);
            continue;
        }
        std::vector<long> parts;
        BigInt s = 1;
        long total = 1;
        for (int c : kids) {
            parts.push_back(size[static_cast<std::size_t>(c)]);
            total += size[static_cast<std::size_t>(c)];
            s *= sigma[static_cast<std::size_t>(c)];
        }
        size[static_cast<std::size_t>(v)] = total;
        sigma[static_cast<std::size_t>(v)] = s * multinomial(parts);
    }
    return sigma[static_cast<std::size_t>(root)];
}

BigInt qary_level_counter(int q, int level) {
    if (q < 2 || level < 1) throw DomainError("qary_level_counter needs q >= 2 and level >= 1");
    BigInt sigma = 1;
    long size = 1;
    for (int l = 1; l < level; ++l) {
        std::vector<long> parts(static_cast<std::size_t>(q), size);
        sigma = multinomial(parts) * power(sigma, static_cast<unsigned long>(q));
        size = size * q + 1;
    }
    return sigma;
}

BigInt two_row_counter(int n1, int n2) {
    if (n1 < 0 || n1 > n2) throw DomainError("two_row_counter needs 0 <= n1 <= n2");
    return binomial(n1 + n2, n1) - binomial(n1 + n2, n1 - 1);
}

bool dispositional_connected(const DispositionalSpec& spec) {
    return underlying_components(make_family(DispositionalFamily{spec})).size() == 1;
}

}  // namespace displab
