#pragma once

#include <json.hpp>

#include "zonotopal/brionvergne.hpp"
#include "zonotopal/matroid.hpp"
#include "zonotopal/periodic.hpp"
#include "zonotopal/polyspace.hpp"

namespace zonotopal {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const RatVec& v);
Json to_json(const Cyclotomic& c);
Json to_json(const MPoly& p);
Json to_json(const BivarPoly& p);
Json to_json(const Character& c);
Json to_json(const PeriodicPoly& p);
Json to_json(const QuasiFunction& f);
Json to_json(const GradedSpan& s);
Json to_json(const GList& x);
Json to_json(const CheckReport& r);
Json to_json(const LClass& l);

Rational rational_from_json(const Json& j);
Cyclotomic cyclotomic_from_json(const Json& j);
MPoly mpoly_from_json(const Json& j, VarKind kind, int nvars);
BivarPoly bivar_from_json(const Json& j);
Character character_from_json(const Json& j);
PeriodicPoly periodic_from_json(const Json& j, int d);
QuasiFunction quasi_from_json(const Json& j, int d);

}  // namespace zonotopal
