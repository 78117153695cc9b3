#pragma once

#include <string>

#include <json.hpp>

#include "zonorec/engine.hpp"
#include "zonorec/spinor.hpp"
#include "zonorec/tropical.hpp"

namespace zonorec {

using json = nlohmann::json;

// All parsers throw Error(BadInput) on malformed documents.
json to_json(const Tiling& t);
Tiling tiling_from_json(const json& j);

json to_json(const FlipMove& m);
FlipMove move_from_json(const json& j);
json to_json(const FlipPath& p);
FlipPath path_from_json(const json& j);

// Variables of `vars` become the keys "i1,...,in".
json to_json(const LaurentPoly& p, const VarSet& vars);
LaurentPoly poly_from_json(const json& j, const VarSet& vars);

std::string rational_str(const mpq_class& q);
mpq_class rational_from_json(const json& j);

json to_json(const Labeling<RationalDomain>& lab);
json to_json(const Labeling<TropicalDomain>& lab);
json to_json(const Labeling<LaurentDomain>& lab, const VarSet& vars);
std::string labeling_domain(const json& j);
Labeling<RationalDomain> rational_labeling_from_json(const json& j);
Labeling<TropicalDomain> tropical_labeling_from_json(const json& j);
// Variables are collected from the keys unless `vars` is non-empty.
Labeling<LaurentDomain> laurent_labeling_from_json(const json& j, VarSet& vars);

json to_json(const Wall& w, const Cutcurve& g);
std::pair<Wall, Cutcurve> wall_from_json(const json& j);
json to_json(const PropagationReport& r);

json to_json(const SpinPoint& p);
SpinPoint spin_point_from_json(const json& j);

}  // namespace zonorec
