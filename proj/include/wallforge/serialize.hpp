#pragma once

#include "wallforge/destabilizers.hpp"
#include "wallforge/polystab.hpp"
#include "wallforge/walls.hpp"

#include <json.hpp>

#include <string>

namespace wallforge {

using json = nlohmann::json;

/// Fixed six-decimal, locale-independent text.
std::string format_fixed(double x);

json to_json(const Rational &q);
Rational rational_from_json(const json &j);

json to_json(const Slope &s);

json to_json(const ChernCharacter &v);
ChernCharacter chern_from_json(const json &j, bool check_lattice = true);

json to_json(const ComplexExact &z);
ComplexExact complex_from_json(const json &j);

json to_json(const Surd &s);
Surd surd_from_json(const json &j);

json to_json(const QuadraticRoot &r);
QuadraticRoot root_from_json(const json &j);

json to_json(const WallCurve &c);
WallCurve curve_from_json(const json &j);

json to_json(const CircleWall &w);
CircleWall circle_from_json(const json &j);

json to_json(const EnumerationReport &r);
/// u0,u1,u2,center,radius_sq rows in enumeration order.
std::string to_csv(const EnumerationReport &r);

json to_json(const FinitenessReport &r);
json to_json(const OrderingCheck &c);

/// {"b", "type", "witness_interval", ...} for one value of b.
json classification_json(const Rational &b);

json to_json(const PolyCharge &z);

} // namespace wallforge
