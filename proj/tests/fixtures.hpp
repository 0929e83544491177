#pragma once

#include <fstream>
#include <string>

#include "displab/ode.hpp"
#include "displab/polynomial.hpp"
#include "json.hpp"

namespace fixture {

inline const nlohmann::json& tables() {
    static const nlohmann::json j = [] {
        std::ifstream in(std::string(DISPLAB_DATA_DIR) + "/golden_tables.json");
        return nlohmann::json::parse(in);
    }();
    return j;
}

inline displab::Polynomial poly(const nlohmann::json& coeffs) {
    std::vector<displab::Rational> c;
    for (const auto& s : coeffs) {
        displab::Rational r(s.get<std::string>());
        r.canonicalize();
        c.push_back(r);
    }
    return displab::Polynomial(std::move(c));
}

inline displab::Ode2 ode(const nlohmann::json& j) { return {poly(j["U"]), poly(j["V"]), poly(j["W"])}; }

}  // namespace fixture
