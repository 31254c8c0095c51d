#include "galform/serial.hpp"

namespace galform {

Json field_to_json(const Field& f) {
    switch (f.kind()) {
        case FieldKind::Rationals:
            return Json{{"kind", "rationals"}};
        case FieldKind::Prime:
            return Json{{"kind", "prime"}, {"p", f.char_p()}};
        case FieldKind::Extension: {
            Json mod = Json::array();
            for (const auto& c : f.desc().modulus) mod.push_back(c.get_str());
            return Json{{"kind", "extension"}, {"p", f.char_p()}, {"modulus", mod}};
        }
    }
    throw error("unreachable");
}

Field field_from_json(const Json& j) {
    std::string kind = j.at("kind");
    if (kind == "rationals") return Field::rationals();
    if (kind == "prime") return Field::prime(j.at("p").get<unsigned long>());
    if (kind != "extension") throw error("unknown field kind: " + kind);
    unsigned long p = j.at("p").get<unsigned long>();
    std::vector<Rational> mod;
    for (const auto& c : j.at("modulus")) mod.push_back(Rational(c.get<std::string>()));
    if (p == 0) return Field::rational_extension(mod);
    std::vector<unsigned long> m;
    for (const auto& c : mod) {
        Int v = c.get_num() % (long)p;
        if (v < 0) v += (long)p;
        m.push_back(v.get_ui());
    }
    return Field::extension(p, m);
}

Json element_to_json(const FieldElement& e) {
    if (e.field().kind() == FieldKind::Rationals) return e.rational().get_str();
    Json a = Json::array();
    for (unsigned long c : e.coeffs()) a.push_back(c);
    return a;
}

FieldElement element_from_json(const Field& f, const Json& j) {
    if (f.kind() == FieldKind::Rationals) return f.from_rational(Rational(j.get<std::string>()));
    std::vector<unsigned long> cf;
    for (const auto& c : j) cf.push_back(c.get<unsigned long>());
    if (f.kind() == FieldKind::Prime) {
        if (cf.size() != 1) throw error("prime field element needs one coordinate");
        return f.from_int((long)cf[0]);
    }
    return f.from_coeffs(cf);
}

Json poly_to_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(element_to_json(c));
    return a;
}

Poly poly_from_json(const Field& f, const Json& j) {
    std::vector<FieldElement> cf;
    for (const auto& c : j) cf.push_back(element_from_json(f, c));
    return Poly(f, cf);
}

Json group_to_json(const FiniteGroup& g) {
    return Json{{"order", g.order}, {"table", g.table}, {"labels", g.labels}, {"name", g.name}};
}

FiniteGroup group_from_json(const Json& j) {
    FiniteGroup g;
    g.order = j.at("order").get<int>();
    g.table = j.at("table").get<std::vector<std::vector<int>>>();
    g.labels = j.at("labels").get<std::vector<std::string>>();
    g.name = j.value("name", "?");
    std::vector<std::string> rep = g.validate();
    if (!rep.empty()) throw error("invalid group table: " + rep.front());
    return g;
}

Json point_to_json(const FamilyPoint& pt) {
    Json h = Json::array(), d = Json::array(), e = Json::array();
    for (const auto& p : pt.h) h.push_back(poly_to_json(p));
    for (const auto& p : pt.d) d.push_back(poly_to_json(p));
    for (const auto& row : pt.e) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(poly_to_json(p));
        e.push_back(r);
    }
    return Json{{"field", field_to_json(pt.base)}, {"group", group_to_json(pt.gamma)},
                {"f", poly_to_json(pt.f)},         {"h", h},
                {"d", d},                          {"e", e}};
}

FamilyPoint point_from_json(const Json& j) {
    FamilyPoint pt;
    pt.base = field_from_json(j.at("field"));
    pt.gamma = group_from_json(j.at("group"));
    pt.f = poly_from_json(pt.base, j.at("f"));
    for (const auto& p : j.at("h")) pt.h.push_back(poly_from_json(pt.base, p));
    for (const auto& p : j.at("d")) pt.d.push_back(poly_from_json(pt.base, p));
    for (const auto& row : j.at("e")) {
        std::vector<Poly> r;
        for (const auto& p : row) r.push_back(poly_from_json(pt.base, p));
        pt.e.push_back(std::move(r));
    }
    return pt;
}

namespace {

Json ivec_to_json(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

std::vector<Int> ivec_from_json(const Json& j) {
    std::vector<Int> v;
    for (const auto& x : j) v.push_back(Int(x.get<std::string>()));
    return v;
}

}  // namespace

Json root_datum_to_json(const BasedRootDatum& b) {
    Json roots = Json::array(), coroots = Json::array();
    for (const auto& r : b.datum.roots) roots.push_back(ivec_to_json(r));
    for (const auto& r : b.datum.coroots) coroots.push_back(ivec_to_json(r));
    return Json{{"rank", b.datum.rank}, {"roots", roots},   {"coroots", coroots},
                {"base", b.base},       {"name", b.name}};
}

BasedRootDatum root_datum_from_json(const Json& j) {
    BasedRootDatum b;
    b.datum.rank = j.at("rank").get<long>();
    for (const auto& r : j.at("roots")) b.datum.roots.push_back(ivec_from_json(r));
    for (const auto& r : j.at("coroots")) b.datum.coroots.push_back(ivec_from_json(r));
    b.base = j.at("base").get<std::vector<long>>();
    b.name = j.value("name", "?");
    std::vector<std::string> rep = validate_root_datum(b.datum);
    if (!rep.empty()) throw error("invalid root datum: " + rep.front());
    return b;
}

Json presentation_to_json(const Presentation& p) {
    Json rels = Json::array();
    for (const auto& r : p.relations) {
        Json terms = Json::array();
        for (const auto& [mono, c] : r.terms()) terms.push_back(Json::array({c.get_str(), mono}));
        rels.push_back(terms);
    }
    return Json{{"variables", p.variables}, {"relations", rels}};
}

}  // namespace galform
