#pragma once

#include <string>
#include <vector>

#include "displab/companion.hpp"
#include "displab/extremal.hpp"
#include "displab/ode.hpp"
#include "displab/strict_count.hpp"
#include "json.hpp"

namespace displab {

// Highest degree first: "1/2·X^3 + 11/2·X^2 + 13·X + 5".
std::string to_pretty(const Polynomial& p);
// "(9·X^2 + 72·X)Y'' + (9·X^2 + 72·X + 72)Y' - (18·X + 108)Y = 0"
std::string to_pretty(const Ode2& ode);

// Index = degree, coefficients as rational strings.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Ode2& ode);
Ode2 ode_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CompanionResult& r);
nlohmann::json to_json(const SearchReport& r);
nlohmann::json to_json(const StaircaseData& s);
nlohmann::json to_json(const std::vector<Disposition>& ds);

// "c0,c1,..." with rational entries, lowest degree first.
Polynomial parse_polynomial_list(const std::string& text);

}  // namespace displab
