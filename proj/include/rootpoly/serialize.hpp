#pragma once

#include <json.hpp>

#include "rootpoly/combinatorics.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/shelling.hpp"

namespace rootpoly {

// Rationals and big integers travel as decimal strings.

void to_json(nlohmann::json& j, const FVector& f);
void from_json(const nlohmann::json& j, FVector& f);

void to_json(nlohmann::json& j, const EhrhartPolynomial& p);
void from_json(const nlohmann::json& j, EhrhartPolynomial& p);

void to_json(nlohmann::json& j, const EhrhartSeries& s);
void from_json(const nlohmann::json& j, EhrhartSeries& s);

void to_json(nlohmann::json& j, const ShellingStep& s);
void from_json(const nlohmann::json& j, ShellingStep& s);

}  // namespace rootpoly
