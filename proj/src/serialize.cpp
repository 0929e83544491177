#include "displab/serialize.hpp"

#include "displab/error.hpp"

namespace displab {

namespace {

nlohmann::json strings(const std::vector<Rational>& v) {
    auto j = nlohmann::json::array();
    for (const auto& c : v) j.push_back(to_string(c));
    return j;
}

nlohmann::json strings(const std::vector<BigInt>& v) {
    auto j = nlohmann::json::array();
    for (const auto& c : v) j.push_back(to_string(c));
    return j;
}

}  // namespace

std::string to_pretty(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        Rational mag = abs(c);
        std::string mono = k == 0 ? "" : k == 1 ? "X" : "X^" + std::to_string(k);
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "·" + mono;
    }
    return out;
}

std::string to_pretty(const Ode2& ode) {
    std::string out;
    auto term = [&](const Polynomial& p, const char* y) {
        if (p.is_zero()) return;
        bool neg = p.leading() < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += "(" + to_pretty(neg ? -p : p) + ")" + y;
    };
    term(ode.U(), "Y''");
    term(ode.V(), "Y'");
    term(ode.W(), "Y");
    if (out.empty()) out = "0";
    return out + " = 0";
}

nlohmann::json to_json(const Polynomial& p) { return strings(p.coeffs()); }

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
    std::vector<Rational> c;
    for (const auto& e : j) {
        if (e.is_string())
            c.push_back(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer())
            c.emplace_back(BigInt(e.get<long>()));
        else
            throw ParseError("polynomial coefficients must be strings or integers");
    }
    return Polynomial(std::move(c));
}

nlohmann::json to_json(const Ode2& ode) {
    return {{"U", to_json(ode.U())}, {"V", to_json(ode.V())}, {"W", to_json(ode.W())}};
}

Ode2 ode_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("U") || !j.contains("V") || !j.contains("W"))
        throw ParseError("ODE JSON needs U, V and W");
    return Ode2(polynomial_from_json(j["U"]), polynomial_from_json(j["V"]), polynomial_from_json(j["W"]));
}

nlohmann::json to_json(const CompanionResult& r) {
    return {{"vertex", r.vertex}, {"dual", r.dual}, {"counters", strings(r.counters)}, {"poly", to_json(r.poly)}};
}

nlohmann::json to_json(const SearchReport& r) {
    auto specs = nlohmann::json::array();
    for (const auto& s : r.argmax_specs) specs.push_back(nlohmann::json::parse(to_json(s)));
    return {{"order", r.order},
            {"max_counter", to_string(r.max_counter)},
            {"total_enumerated", r.total_enumerated},
            {"argmax_specs", specs},
            {"argmax_are_staircases", r.argmax_are_staircases}};
}

nlohmann::json to_json(const StaircaseData& s) {
    return {{"n", s.n}, {"f", strings(s.f_row)}, {"a", strings(s.a)}, {"s", strings(s.s_gen)}, {"g", strings(s.g)}};
}

nlohmann::json to_json(const std::vector<Disposition>& ds) {
    auto j = nlohmann::json::array();
    for (const auto& d : ds) j.push_back(d.mapping);
    return j;
}

Polynomial parse_polynomial_list(const std::string& text) {
    std::vector<Rational> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find(',', pos);
        c.push_back(parse_rational(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Polynomial(std::move(c));
}

}  // namespace displab
