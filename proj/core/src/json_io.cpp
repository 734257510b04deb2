#include "fq/json_io.hpp"

namespace fq {

namespace {

void expect(bool cond, const std::string& what) {
    if (!cond) throw InvalidInput(what);
}

std::shared_ptr<const RootSystem> shared_rs(const GroupSpec& g) {
    return std::make_shared<RootSystem>(g);
}

} // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(BigInt(j.get<std::int64_t>()));
    if (j.is_number_float()) {
        // route through the decimal printer so 0.5 stays exact
        return parse_rational(Json(j).dump());
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InvalidInput("expected a rational (number or \"p/q\" string)");
}

Json group_to_json(const GroupSpec& g) {
    Json factors = Json::array();
    for (const auto& f : g.factors) {
        Json jf;
        switch (f.kind) {
            case FactorKind::Torus:
                jf["kind"] = "torus";
                jf["rank"] = f.n;
                break;
            case FactorKind::U:
                jf["kind"] = "U";
                jf["n"] = f.n;
                break;
            case FactorKind::SU:
                jf["kind"] = "SU";
                jf["n"] = f.n;
                break;
        }
        factors.push_back(jf);
    }
    return Json{{"factors", factors}};
}

GroupSpec group_from_json(const Json& j) {
    expect(j.is_object() && j.contains("factors") && j["factors"].is_array(),
           "group needs a factors array");
    GroupSpec g;
    for (const auto& jf : j["factors"]) {
        expect(jf.contains("kind"), "factor needs a kind");
        std::string kind = jf["kind"].get<std::string>();
        Factor f{};
        if (kind == "torus" || kind == "Torus" || kind == "T") {
            f.kind = FactorKind::Torus;
            expect(jf.contains("rank"), "torus factor needs a rank");
            f.n = jf["rank"].get<int>();
        } else if (kind == "U" || kind == "u") {
            f.kind = FactorKind::U;
            expect(jf.contains("n"), "U factor needs n");
            f.n = jf["n"].get<int>();
        } else if (kind == "SU" || kind == "su") {
            f.kind = FactorKind::SU;
            expect(jf.contains("n"), "SU factor needs n");
            f.n = jf["n"].get<int>();
        } else {
            throw InvalidInput("unknown factor kind '" + kind + "'");
        }
        g.factors.push_back(f);
    }
    g.validate();
    return g;
}

Json weight_to_json(const Weight& w) {
    Json arr = Json::array();
    for (auto c : w.coords) arr.push_back(c);
    return arr;
}

Weight weight_from_json(const Json& j) {
    expect(j.is_array(), "weight must be an integer array");
    std::vector<std::int64_t> c;
    for (const auto& v : j) {
        expect(v.is_number_integer(), "weight coordinates must be integers");
        c.push_back(v.get<std::int64_t>());
    }
    return Weight(std::move(c));
}

Json character_to_json(const CharacterElement& c, const RootSystem& rs) {
    Json coeffs = Json::array();
    for (const auto& [w, m] : c.coeffs)
        coeffs.push_back(Json{{"weight", weight_to_json(w)}, {"mult", m}});
    return Json{{"group", group_to_json(rs.group())}, {"coeffs", coeffs}};
}

CharacterElement character_from_json(const Json& j, const RootSystem& rs) {
    expect(j.contains("coeffs") && j["coeffs"].is_array(), "character needs a coeffs array");
    CharacterElement c;
    c.group_sig = rs.signature();
    for (const auto& e : j["coeffs"]) {
        Weight w = rs.canonical(weight_from_json(e.at("weight")));
        if (!is_dominant(w, rs))
            throw NonDominant("character key " + w.to_string() + " is not dominant");
        c.add(w, e.at("mult").get<std::int64_t>());
    }
    return c;
}

Json series_to_json(const FormalSeries& s, const RootSystem& rs) {
    Json coeffs = Json::array();
    for (const auto& [w, m] : s.coeffs)
        coeffs.push_back(Json{{"weight", weight_to_json(w)}, {"mult", m}});
    return Json{{"group", group_to_json(rs.group())},
                {"coeffs", coeffs},
                {"trusted_radius", s.trusted.value()},
                {"trusted_radius_sq", rational_to_string(s.trusted.sq())}};
}

FormalSeries series_from_json(const Json& j, const RootSystem& rs) {
    FormalSeries s;
    s.group_sig = rs.signature();
    if (j.contains("trusted_radius_sq"))
        s.trusted = RadiusSq::from_sq(rational_from_json(j["trusted_radius_sq"]));
    else if (j.contains("trusted_radius"))
        s.trusted = RadiusSq::from_value(rational_from_json(j["trusted_radius"]));
    else
        throw InvalidInput("series needs trusted_radius or trusted_radius_sq");
    expect(j.contains("coeffs") && j["coeffs"].is_array(), "series needs a coeffs array");
    for (const auto& e : j["coeffs"]) {
        Weight w = rs.canonical(weight_from_json(e.at("weight")));
        if (!is_dominant(w, rs))
            throw NonDominant("series key " + w.to_string() + " is not dominant");
        s.add_coeff(w, e.at("mult").get<std::int64_t>());
    }
    return s;
}

Json embedding_to_json(const SubgroupEmbedding& e) {
    Json m = Json::array();
    for (const auto& row : e.matrix) {
        Json r = Json::array();
        for (auto v : row) r.push_back(v);
        m.push_back(r);
    }
    return Json{{"supergroup", group_to_json(e.supergroup->group())},
                {"subgroup", group_to_json(e.subgroup->group())},
                {"matrix", m}};
}

std::pair<SubgroupEmbedding, std::optional<Rational>> embedding_from_json(const Json& j) {
    expect(j.contains("supergroup") && j.contains("subgroup") && j.contains("matrix"),
           "embedding needs supergroup, subgroup and matrix");
    auto sup = shared_rs(group_from_json(j["supergroup"]));
    auto sub = shared_rs(group_from_json(j["subgroup"]));
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& row : j["matrix"]) {
        std::vector<std::int64_t> r;
        for (const auto& v : row) r.push_back(v.get<std::int64_t>());
        m.push_back(std::move(r));
    }
    std::optional<Rational> margin;
    if (j.contains("restricted_margin_sq"))
        margin = rational_from_json(j["restricted_margin_sq"]);
    return {SubgroupEmbedding(std::move(sup), std::move(sub), std::move(m)), margin};
}

Json model_to_json(const HermitianModel& m) {
    Json w = Json::array();
    for (const auto& x : m.weights) w.push_back(weight_to_json(x));
    Json j{{"group", group_to_json(m.group->group())}, {"weights", w}};
    if (m.certified_margin_sq)
        j["certified_margin_sq"] = rational_to_string(*m.certified_margin_sq);
    return j;
}

HermitianModel model_from_json(const Json& j) {
    expect(j.contains("group") && j.contains("weights"), "model needs group and weights");
    HermitianModel m;
    m.group = shared_rs(group_from_json(j["group"]));
    for (const auto& w : j["weights"])
        m.weights.push_back(m.group->canonical(weight_from_json(w)));
    if (j.contains("certified_margin_sq"))
        m.certified_margin_sq = rational_from_json(j["certified_margin_sq"]);
    return m;
}

Json polytope_to_json(const AdaptedPolytope& p) {
    Json v = Json::array();
    for (const auto& x : p.vertices()) v.push_back(weight_to_json(x));
    return Json{{"group", group_to_json(p.group().group())}, {"vertices", v}};
}

AdaptedPolytope polytope_from_json(const Json& j) {
    expect(j.contains("group") && j.contains("vertices"),
           "polytope needs group and vertices");
    auto rs = shared_rs(group_from_json(j["group"]));
    std::vector<Weight> verts;
    for (const auto& v : j["vertices"]) verts.push_back(weight_from_json(v));
    return AdaptedPolytope(std::move(rs), std::move(verts));
}

Json report_to_json(const Report& r) {
    Json diffs = Json::array();
    for (const auto& d : r.diffs)
        diffs.push_back(Json{{"weight", weight_to_json(d.weight)},
                             {"lhs", d.lhs},
                             {"rhs", d.rhs}});
    Json info = Json::object();
    for (const auto& [k, v] : r.info) info[k] = v;
    return Json{{"identity", r.identity},
                {"pass", r.pass},
                {"radius", r.radius.value()},
                {"radius_sq", rational_to_string(r.radius.sq())},
                {"diffs", diffs},
                {"info", info}};
}

Json multiset_to_json(const WeightMultiset& ws) {
    Json arr = Json::array();
    for (const auto& [w, m] : ws.counts)
        arr.push_back(Json{{"weight", weight_to_json(w)}, {"mult", m}});
    return arr;
}

} // namespace fq
