#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "displab/companion.hpp"
#include "displab/error.hpp"
#include "displab/extremal.hpp"
#include "displab/families.hpp"
#include "displab/laguerre.hpp"
#include "displab/nonstrict.hpp"
#include "displab/ode.hpp"
#include "displab/orthogonality.hpp"
#include "displab/serialize.hpp"
#include "displab/strict_count.hpp"
#include "json.hpp"

#ifndef DISPLAB_DATA_DIR
#define DISPLAB_DATA_DIR "data"
#endif

namespace displab::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultMaxOrder = 32;

const char* const kFormatsHelp =
    "Rationals print as p/q. In pretty mode polynomials print highest degree first;\n"
    "in JSON and CSV coefficients are listed lowest degree first (index = degree).";

const char* const kFamilyGrammar =
    "path:n            directed path v1 -> ... -> vn\n"
    "empty:n           n isolated vertices\n"
    "star:n[,in|out]   centre v1 with n-1 leaves, arcs out of the centre by default\n"
    "staircase:n       zigzag staircase\n"
    "qary:q,l          complete q-ary tree with l levels, arcs parent -> child\n"
    "tworow:n1,n2      top row v1..v_n2, bottom row u1..u_n1, arcs vK -> uK\n"
    "tree:p0,p1,...    rooted tree by parent indices, -1 for the root\n"
    "disp:len,shift;...  dispositional rows top to bottom\n";

struct GraphInput {
    std::string file;
    std::string family;
    std::string vertex;
    int max_order = 0;
};

struct Loaded {
    SimpleDigraph graph;
    std::optional<FamilySpec> family;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Loaded load(const GraphInput& in) {
    Loaded r;
    if (!in.family.empty()) {
        r.family = parse_family(in.family);
        r.graph = make_family(*r.family);
    } else {
        std::string text = read_file(in.file);
        auto first = text.find_first_not_of(" \t\r\n");
        bool is_json = first != std::string::npos && text[first] == '{';
        r.graph = normalize(is_json ? parse_digraph_json(text) : parse_digraph_text(text));
    }
    if (r.graph.order() > in.max_order)
        throw SizeError("digraph order " + std::to_string(r.graph.order()) + " exceeds --max-order " +
                        std::to_string(in.max_order));
    return r;
}

int vertex_of(const Loaded& l, const std::string& label) {
    int v;
    if (l.family) {
        v = resolve_vertex(*l.family, label);
    } else {
        std::string digits = !label.empty() && label[0] == 'v' ? label.substr(1) : label;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad vertex label '" + label + "'");
        v = std::stoi(digits) - (label[0] == 'v' ? 1 : 0);
    }
    if (v < 0 || v >= l.graph.order()) throw DomainError("vertex '" + label + "' out of range");
    return v;
}

void add_graph_options(CLI::App* sub, GraphInput& in, bool with_vertex) {
    auto* file = sub->add_option("--file", in.file, "Edge list ('n <count>' then 'u v' lines) or JSON digraph");
    auto* fam = sub->add_option("--family", in.family, "Family string, see 'families'");
    file->excludes(fam);
    fam->excludes(file);
    if (with_vertex) sub->add_option("--vertex", in.vertex, "Vertex label (v1, u2, or a 0-based index)")->default_val("v1");
    sub->add_option("--max-order", in.max_order, "Largest accepted digraph order")->default_val(default_max_order());
}

void require_graph(const GraphInput& in) {
    if (in.file.empty() == in.family.empty()) throw ParseError("exactly one of --file and --family is required");
}

std::string poly_csv(const Polynomial& p) {
    std::string s = "degree,coefficient\n";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) s += std::to_string(k) + "," + to_string(p.coeffs()[k]) + "\n";
    return s;
}

json strings(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::string ode_csv(const Ode2& e) {
    std::string s = "term,coefficients\n";
    auto row = [&](const char* name, const Polynomial& p) {
        s += name;
        for (const auto& c : p.coeffs()) s += "," + to_string(c);
        s += "\n";
    };
    row("U", e.U());
    row("V", e.V());
    row("W", e.W());
    return s;
}

std::vector<int> parse_ints(const std::string& text, std::size_t count, const char* what) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ParseError(std::string("bad integer in ") + what + ": '" + item + "'");
        }
    }
    if (v.size() != count) throw ParseError(std::string(what) + " needs " + std::to_string(count) + " integers");
    return v;
}

std::string series_pretty(const TruncatedSeries& s) {
    std::string out;
    for (std::size_t k = 0; k <= s.order(); ++k) out += std::to_string(k) + ": " + to_string(s[k]) + "\n";
    return out;
}

// Golden tables.

json regenerate_tables() {
    json t;
    json zig;
    std::vector<StaircaseData> rows;
    for (int n = 0; n <= 14; ++n) rows.push_back(staircase_data(n, 5));
    for (int i = 0; i <= 5; ++i) {
        json row = json::array();
        for (int n = 0; n <= 14; ++n) row.push_back(to_string(rows[static_cast<std::size_t>(n)].s_gen[static_cast<std::size_t>(i)]));
        zig[std::to_string(i)] = row;
    }
    t["generalized_zigzag"] = zig;
    for (int n = 1; n <= 6; ++n) {
        auto key = std::to_string(n);
        auto T = companion_by_recurrence(make_family(StaircaseFamily{n}), 0);
        t["staircase_companions"][key] = to_json(T);
        t["staircase_g"][key] = strings(laguerre_basis_decompose_flipped(T).g);
        if (n >= 2) {
            auto qr = reduce_to_QR(T.compose_neg());
            t["staircase_qr"][key] = {{"Q", to_json(qr.Q)}, {"R", to_json(qr.R)}};
            t["staircase_odes"][key] = to_json(laguerrean_flipped(T));
            t["catalan_polynomials"][key] = to_json(catalan_polynomial(n));
            t["catalan_odes"][key] = to_json(catalan_ode(n, 2));
        }
    }
    auto p = two_row_companion(2, 3, 2);
    t["two_row_2_3_v2"] = {{"poly", to_json(p)}, {"ode", to_json(two_row_ode(2, 3, 2))}};
    std::vector<Polynomial> r3{catalan_polynomial(3, 3), catalan_polynomial(4, 3)};
    t["r3_cross_inner_product"] = to_string(gram(r3, true).entries[0][1]);
    return t;
}

// ODE tables are compared up to a nonzero scalar; everything else exactly.
bool table_entry_matches(const std::string& table, const json& got, const json& want) {
    if (table == "staircase_odes") return same_equation(ode_from_json(got), ode_from_json(want));
    if (table == "two_row_2_3_v2")
        return got["poly"] == want["poly"] && same_equation(ode_from_json(got["ode"]), ode_from_json(want["ode"]));
    return got == want;
}

// Canonical rational strings so that "2/4" in a fixture compares as "1/2".
json canonical(const json& j) {
    if (j.is_string()) {
        try {
            return to_string(parse_rational(j.get<std::string>()));
        } catch (const ParseError&) {
            return j;
        }
    }
    if (j.is_array() || j.is_object()) {
        json c = j;
        for (auto it = c.begin(); it != c.end(); ++it) *it = canonical(*it);
        return c;
    }
    return j;
}

int golden_tables(const std::string& fixture_path, bool emit, std::ostream& out) {
    json fixture = canonical(json::parse(read_file(fixture_path)));
    json got = regenerate_tables();
    if (emit) {
        out << got.dump(1) << "\n";
        return 0;
    }
    int mismatches = 0;
    for (auto it = fixture.begin(); it != fixture.end(); ++it) {
        const std::string& table = it.key();
        if (!got.contains(table)) {
            out << table << ": MISSING\n";
            ++mismatches;
            continue;
        }
        if (it->is_object() && table != "two_row_2_3_v2") {
            for (auto e = it->begin(); e != it->end(); ++e) {
                bool ok = got[table].contains(e.key()) && table_entry_matches(table, got[table][e.key()], *e);
                out << table << "[" << e.key() << "]: " << (ok ? "ok" : "MISMATCH") << "\n";
                mismatches += !ok;
            }
        } else {
            bool ok = table_entry_matches(table, got[table], *it);
            out << table << ": " << (ok ? "ok" : "MISMATCH") << "\n";
            mismatches += !ok;
        }
    }
    // row 0 of the generalized table is the zigzag sequence itself
    for (int n = 0; n <= 14; ++n)
        if (to_string(staircase_counter(n)) != got["generalized_zigzag"]["0"][static_cast<std::size_t>(n)]) {
            out << "zigzag counter mismatch at n=" << n << "\n";
            ++mismatches;
        }
    out << (mismatches ? std::to_string(mismatches) + " mismatches" : std::string("all tables match")) << "\n";
    return mismatches ? 1 : 0;
}

}  // namespace

int default_max_order() {
    if (const char* env = std::getenv("DISPLAB_MAX_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= kMaxSubsetOrder) return static_cast<int>(v);
    }
    return kDefaultMaxOrder;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact disposition counting, companion polynomials and their differential equations", "displab"};
    app.footer(kFormatsHelp);
    app.require_subcommand(1);
    // lets --format appear after the subcommand
    app.fallthrough();
    std::string format = "pretty";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}))->default_val("pretty");

    GraphInput count_in;
    std::string count_method = "memo";
    auto* count_cmd = app.add_subcommand("count", "Number of dispositions of a digraph");
    add_graph_options(count_cmd, count_in, false);
    count_cmd->add_option("--method", count_method)->check(CLI::IsMember({"memo", "bruteforce"}))->default_val("memo");

    GraphInput disp_in;
    std::size_t disp_cap = kDefaultDispositionCap;
    auto* disp_cmd = app.add_subcommand("dispositions", "List every disposition (order at most 12)");
    add_graph_options(disp_cmd, disp_in, false);
    disp_cmd->add_option("--cap", disp_cap, "Refuse when there are more dispositions than this")->default_val(kDefaultDispositionCap);

    GraphInput comp_in;
    std::string comp_method = "counters";
    bool comp_dual = false;
    auto* comp_cmd = app.add_subcommand("companion", "Companion polynomial at a vertex");
    add_graph_options(comp_cmd, comp_in, true);
    comp_cmd->add_option("--method", comp_method)->check(CLI::IsMember({"counters", "recurrence"}))->default_val("counters");
    comp_cmd->add_flag("--dual", comp_dual, "Attach the path towards the vertex instead");

    GraphInput ode_in;
    std::optional<int> ode_catalan, ode_laguerre, ode_empty;
    int ode_r = 2;
    std::string ode_tworow, ode_poly;
    bool ode_flipped = false, ode_verify = false;
    auto* ode_cmd = app.add_subcommand("ode", "Second-order linear equation of a companion or named polynomial");
    add_graph_options(ode_cmd, ode_in, true);
    ode_cmd->add_option("--catalan", ode_catalan, "Printed Catalan equation for C*_n at v_r");
    ode_cmd->add_option("--r", ode_r, "Row index r for --catalan")->default_val(2);
    ode_cmd->add_option("--tworow", ode_tworow, "n1,n2,r closed-form two-row equation");
    ode_cmd->add_option("--poly", ode_poly, "c0,c1,... laguerrean of an explicit polynomial");
    ode_cmd->add_option("--laguerre", ode_laguerre, "Laguerre equation of degree n");
    ode_cmd->add_option("--empty", ode_empty, "Equation of the companion of E_{j+1}");
    ode_cmd->add_flag("--flipped", ode_flipped, "Eliminate in the basis of L_n(-X)");
    ode_cmd->add_flag("--verify", ode_verify, "Also check that the equation annihilates the polynomial");

    int gram_n = 0, gram_r = 2;
    std::vector<std::string> gram_polys;
    bool gram_flip = false;
    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix for the weight exp(-x) on [0, inf)");
    gram_cmd->add_option("--catalan", gram_n, "Use C*_r .. C*_n (C*_1 = 1 when r = 2)");
    gram_cmd->add_option("--r", gram_r)->default_val(2);
    gram_cmd->add_option("--poly", gram_polys, "c0,c1,... (repeatable)");
    gram_cmd->add_flag("--flip", gram_flip, "Evaluate every polynomial at -X");

    GraphInput ns_in;
    int ns_size = 0;
    std::string ns_method = "ie";
    auto* ns_cmd = app.add_subcommand("nonstrict", "Non-strict dispositions of a given size");
    add_graph_options(ns_cmd, ns_in, false);
    ns_cmd->add_option("--size,-i", ns_size, "Number of values")->required();
    ns_cmd->add_option("--method", ns_method)->check(CLI::IsMember({"ie", "downset", "bruteforce"}))->default_val("ie");

    GraphInput series_in;
    std::string series_kind;
    int series_j = 1;
    std::size_t series_order = 10;
    auto* series_cmd = app.add_subcommand("series", "Truncated exponential generating series");
    add_graph_options(series_cmd, series_in, true);
    series_cmd->add_option("--kind", series_kind)
        ->check(CLI::IsMember({"counters", "nonstrict-fixed", "nonstrict-diagonal", "staircase"}))
        ->required();
    series_cmd->add_option("--j", series_j, "Number of values for nonstrict-fixed")->default_val(1);
    series_cmd->add_option("--order", series_order, "Truncation order N")->default_val(10);

    int ext_order = 0;
    bool ext_parallel = false;
    unsigned ext_threads = 0;
    auto* ext_cmd = app.add_subcommand("extremal", "Largest counter among connected dispositional digraphs");
    ext_cmd->add_option("--order,-m", ext_order)->required();
    ext_cmd->add_flag("--parallel", ext_parallel, "Use a worker pool");
    ext_cmd->add_option("--threads", ext_threads, "Workers for --parallel (default: hardware)");

    GraphInput fam_in;
    auto* fam_cmd = app.add_subcommand("families", "Family grammar, or the digraph a family string denotes");
    fam_cmd->add_option("--family", fam_in.family);
    fam_cmd->add_option("--max-order", fam_in.max_order)->default_val(default_max_order());

    std::string fixture = std::string(DISPLAB_DATA_DIR) + "/golden_tables.json";
    bool emit = false;
    auto* tables_cmd = app.add_subcommand("paper-tables", "Recompute the golden tables and diff against the fixture");
    tables_cmd->add_option("--fixture", fixture)->default_val(fixture);
    tables_cmd->add_flag("--emit", emit, "Print the recomputed tables as JSON instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count_cmd->parsed()) {
            require_graph(count_in);
            auto l = load(count_in);
            BigInt c = count_method == "bruteforce" ? count_bruteforce(l.graph) : count(l.graph);
            if (format == "json")
                out << json{{"order", l.graph.order()}, {"count", to_string(c)}}.dump(2) << "\n";
            else if (format == "csv")
                out << "order,count\n" << l.graph.order() << "," << c << "\n";
            else
                out << c << "\n";
        } else if (disp_cmd->parsed()) {
            require_graph(disp_in);
            auto l = load(disp_in);
            auto ds = enumerate_dispositions(l.graph, disp_cap);
            if (format == "json") {
                out << to_json(ds).dump(2) << "\n";
            } else {
                std::string sep = format == "csv" ? "," : " ";
                if (format == "csv") {
                    for (int v = 0; v < l.graph.order(); ++v) out << (v ? "," : "") << "v" << v;
                    out << "\n";
                }
                for (const auto& f : ds) {
                    for (std::size_t v = 0; v < f.mapping.size(); ++v) out << (v ? sep : "") << f.mapping[v];
                    out << "\n";
                }
            }
        } else if (comp_cmd->parsed()) {
            require_graph(comp_in);
            auto l = load(comp_in);
            int v = vertex_of(l, comp_in.vertex);
            CompanionResult r;
            if (comp_method == "recurrence") {
                r.poly = comp_dual ? companion_dual(l.graph, v) : companion_by_recurrence(l.graph, v);
                r.vertex = v;
                r.dual = comp_dual;
            } else {
                r = companion_from_counters(l.graph, v, comp_dual);
            }
            if (format == "json")
                out << to_json(r).dump(2) << "\n";
            else if (format == "csv")
                out << poly_csv(r.poly);
            else
                out << to_pretty(r.poly) << "\n";
        } else if (ode_cmd->parsed()) {
            int sources = (ode_catalan ? 1 : 0) + !ode_tworow.empty() + !ode_poly.empty() + (ode_laguerre ? 1 : 0) +
                          (ode_empty ? 1 : 0) + (!ode_in.file.empty() || !ode_in.family.empty());
            if (sources != 1)
                throw ParseError("ode needs exactly one of --file/--family, --catalan, --tworow, --poly, --laguerre, --empty");
            Ode2 e;
            std::optional<Polynomial> p;
            if (ode_catalan) {
                e = catalan_ode(*ode_catalan, ode_r);
                p = catalan_polynomial(*ode_catalan, ode_r);
            } else if (!ode_tworow.empty()) {
                auto a = parse_ints(ode_tworow, 3, "--tworow");
                e = two_row_ode(a[0], a[1], a[2]);
                p = two_row_companion(a[0], a[1], a[2]);
            } else if (ode_laguerre) {
                e = laguerre_ode(*ode_laguerre);
                p = laguerre(*ode_laguerre);
            } else if (ode_empty) {
                e = empty_digraph_ode(*ode_empty);
                p = companion_by_recurrence(SimpleDigraph(*ode_empty + 1, {}), 0);
            } else {
                if (!ode_poly.empty()) {
                    p = parse_polynomial_list(ode_poly);
                } else {
                    auto l = load(ode_in);
                    p = companion_by_recurrence(l.graph, vertex_of(l, ode_in.vertex));
                }
                e = ode_flipped ? laguerrean_flipped(*p) : laguerrean(*p);
            }
            bool verified = !ode_verify || verify_ode(e, *p);
            if (format == "json") {
                json j = to_json(e);
                j["polynomial"] = to_json(*p);
                if (ode_verify) j["verified"] = verified;
                out << j.dump(2) << "\n";
            } else if (format == "csv") {
                out << ode_csv(e);
            } else {
                out << to_pretty(e) << "\n";
                if (ode_verify) out << "verified: " << (verified ? "yes" : "no") << "\n";
            }
            if (!verified) return 1;
        } else if (gram_cmd->parsed()) {
            std::vector<Polynomial> polys;
            std::vector<std::string> labels;
            if (gram_n > 0) {
                for (int n = gram_r == 2 ? 1 : gram_r; n <= gram_n; ++n) {
                    polys.push_back(catalan_polynomial(n, gram_r));
                    labels.push_back("C" + std::to_string(n));
                }
            }
            for (const auto& s : gram_polys) {
                polys.push_back(parse_polynomial_list(s));
                labels.push_back("p" + std::to_string(labels.size() + 1));
            }
            if (polys.empty()) throw ParseError("gram needs --catalan or --poly");
            auto g = gram(polys, gram_flip, labels);
            if (format == "csv") {
                out << g.to_csv();
            } else if (format == "json") {
                json rows = json::array();
                for (const auto& r : g.entries) rows.push_back(strings(r));
                out << json{{"labels", g.labels}, {"entries", rows}, {"diagonal", g.is_diagonal()}}.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < g.entries.size(); ++i) {
                    out << g.labels[i] << ":";
                    for (const auto& x : g.entries[i]) out << " " << to_string(x);
                    out << "\n";
                }
                out << "diagonal: " << (g.is_diagonal() ? "yes" : "no") << "\n";
            }
        } else if (ns_cmd->parsed()) {
            require_graph(ns_in);
            auto l = load(ns_in);
            BigInt c = ns_method == "bruteforce" ? nonstrict_bruteforce(l.graph, ns_size)
                       : ns_method == "downset"  ? nonstrict_count(l.graph, ns_size, NonstrictMethod::DownsetTransfer)
                                                 : nonstrict_count(l.graph, ns_size);
            if (format == "json")
                out << json{{"order", l.graph.order()}, {"size", ns_size}, {"count", to_string(c)}}.dump(2) << "\n";
            else if (format == "csv")
                out << "order,size,count\n" << l.graph.order() << "," << ns_size << "," << c << "\n";
            else
                out << c << "\n";
        } else if (series_cmd->parsed()) {
            std::optional<TruncatedSeries> s;
            if (series_kind == "counters") {
                require_graph(series_in);
                auto l = load(series_in);
                s = series_from_counters(
                    counters_along_path(l.graph, vertex_of(l, series_in.vertex), static_cast<int>(series_order)));
            } else if (series_kind == "nonstrict-fixed") {
                s = nonstrict_series_fixed_size(series_j, series_order);
            } else if (series_kind == "nonstrict-diagonal") {
                s = nonstrict_series_diagonal(series_order);
            } else {
                std::vector<BigInt> zig;
                for (std::size_t n = 0; n <= series_order; ++n) zig.push_back(staircase_counter(static_cast<int>(n)));
                s = series_from_counters(zig);
            }
            if (format == "json") {
                out << strings(s->coeffs()).dump(2) << "\n";
            } else if (format == "csv") {
                out << "k,coefficient\n";
                for (std::size_t k = 0; k <= s->order(); ++k) out << k << "," << to_string((*s)[k]) << "\n";
            } else {
                out << series_pretty(*s);
            }
        } else if (ext_cmd->parsed()) {
            unsigned threads = 1;
            if (ext_parallel) threads = ext_threads ? ext_threads : std::max(1u, std::thread::hardware_concurrency());
            auto r = max_counter_search(ext_order, threads);
            if (format == "json") {
                out << to_json(r).dump(2) << "\n";
            } else if (format == "csv") {
                out << "order,max_counter,total,argmax_count,staircases_only\n"
                    << r.order << "," << r.max_counter << "," << r.total_enumerated << "," << r.argmax_specs.size()
                    << "," << (r.argmax_are_staircases ? "yes" : "no") << "\n";
            } else {
                out << "order " << r.order << ": max counter " << r.max_counter << " over " << r.total_enumerated
                    << " digraphs\n";
                for (const auto& s : r.argmax_specs) out << "  " << family_name(DispositionalFamily{s}) << "\n";
                out << "argmax only staircases: " << (r.argmax_are_staircases ? "yes" : "no") << "\n";
            }
        } else if (fam_cmd->parsed()) {
            if (fam_in.family.empty()) {
                out << kFamilyGrammar;
            } else {
                auto l = load(fam_in);
                if (format == "json") {
                    out << to_json(l.graph) << "\n";
                } else if (format == "csv") {
                    out << "from,to\n";
                    for (auto [u, v] : l.graph.arcs()) out << u << "," << v << "\n";
                } else {
                    out << "# " << family_name(*l.family) << "\n" << to_text(l.graph);
                }
            }
        } else if (tables_cmd->parsed()) {
            return golden_tables(fixture, emit, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"displab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace displab::cli
