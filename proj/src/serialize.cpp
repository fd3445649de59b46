#include "zonotopal/serialize.hpp"

#include "zonotopal/errors.hpp"

namespace zonotopal {

namespace {

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    fail(ErrorKind::InvalidArgument, "expected an integer");
}

RatVec ratvec_from_json(const Json& j) {
    RatVec v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_json(q));
    return out;
}

Json to_json(const Cyclotomic& c) {
    return Json{{"order", c.order()}, {"coeffs", to_json(c.coeffs())}, {"text", c.str()}};
}

Json to_json(const MPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
    return out;
}

Json to_json(const BivarPoly& p) {
    Json terms = Json::array();
    for (const auto& [ij, c] : p.terms()) terms.push_back(Json{{"a", ij.first}, {"b", ij.second}, {"c", integer_json(c)}});
    return Json{{"terms", terms}};
}

Json to_json(const Character& c) { return Json{{"theta", to_json(c.theta)}, {"tors", to_json(c.tors)}}; }

Json to_json(const PeriodicPoly& p) {
    Json out = Json::array();
    for (const auto& [c, q] : p.terms()) out.push_back(Json{{"character", to_json(c)}, {"poly", to_json(q)}});
    return out;
}

Json to_json(const QuasiFunction& f) {
    Json out = Json::array();
    for (const auto& [c, q] : f.terms()) out.push_back(Json{{"character", to_json(c)}, {"poly", to_json(q)}});
    return out;
}

Json to_json(const GradedSpan& s) {
    Json out = Json::array();
    for (const auto& p : s.basis) out.push_back(Json{{"degree", p.degree()}, {"poly", to_json(p)}, {"text", p.str()}});
    return out;
}

Json to_json(const GList& x) { return Json{{"group", x.group().str()}, {"matrix", x.rows()}}; }

Json to_json(const CheckReport& r) {
    Json out{{"identity", r.identity}, {"points", r.points}, {"status", r.ok ? "pass" : "fail"}};
    if (!r.ok) out["counterexample"] = r.counterexample;
    return out;
}

Json to_json(const LClass& l) {
    Json out = Json::array();
    for (size_t i = 0; i < l.support.size(); ++i)
        out.push_back(Json{{"point", l.support[i]}, {"coeff", to_json(l.coeffs[i])}});
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(ErrorKind::InvalidArgument, "expected a rational string");
    return parse_rational(j.get<std::string>());
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    if (!j.is_object()) return Cyclotomic(rational_from_json(j));
    return Cyclotomic::from_coeffs(j.at("order").get<long>(), ratvec_from_json(j.at("coeffs")));
}

MPoly mpoly_from_json(const Json& j, VarKind kind, int nvars) {
    MPoly p(kind, nvars);
    for (const auto& t : j) {
        Exponent e = t.at("exp").get<Exponent>();
        if (static_cast<int>(e.size()) != nvars) fail(ErrorKind::InvalidArgument, "exponent has the wrong length");
        p.add_term(e, cyclotomic_from_json(t.at("coeff")));
    }
    return p;
}

BivarPoly bivar_from_json(const Json& j) {
    BivarPoly p;
    for (const auto& t : j.at("terms")) p.add(t.at("a").get<int>(), t.at("b").get<int>(), integer_from_json(t.at("c")));
    return p;
}

Character character_from_json(const Json& j) {
    return Character{ratvec_from_json(j.at("theta")), ratvec_from_json(j.at("tors"))};
}

PeriodicPoly periodic_from_json(const Json& j, int d) {
    PeriodicPoly p(d);
    for (const auto& t : j) p.add(character_from_json(t.at("character")), mpoly_from_json(t.at("poly"), VarKind::S, d + 1));
    return p;
}

QuasiFunction quasi_from_json(const Json& j, int d) {
    QuasiFunction f(d);
    for (const auto& t : j) f.add(character_from_json(t.at("character")), mpoly_from_json(t.at("poly"), VarKind::T, d));
    return f;
}

}  // namespace zonotopal
