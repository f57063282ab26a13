#include "liftvf/json_io.hpp"

#include <stdexcept>

namespace liftvf {

Json poly_json(const Poly& p) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Json jm = Json::object();
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0) jm[p.table()->name(v)] = m[v];
        terms.push_back(Json{{"c", to_string(c)}, {"m", std::move(jm)}});
    }
    return Json{{"terms", std::move(terms)}};
}

Poly poly_from_json(const Json& j, const VarTablePtr& table) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON must be {\"terms\":[...]}");
    Poly p = Poly::zero(table);
    for (const auto& t : j["terms"]) {
        const Rational c = parse_rational(t.at("c").get<std::string>());
        Monomial m(table->size(), 0);
        for (const auto& [name, e] : t.at("m").items()) {
            const auto idx = table->index_of(name);
            if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
            m[*idx] = e.get<int>();
            if (m[*idx] < 0) throw std::invalid_argument("negative exponent in JSON");
        }
        p += Poly::monomial(table, std::move(m), c);
    }
    return p;
}

Json field_json(int k, const VectorField& f) {
    Json components = Json::array();
    for (const Poly& c : f.components) components.push_back(poly_json(c));
    return Json{{"k", k},
                {"space", f.space == Space::domain ? "domain" : "codomain"},
                {"label", f.label},
                {"components", std::move(components)}};
}

std::pair<int, VectorField> field_from_json(const Json& j) {
    const int k = j.at("k").get<int>();
    const CrossCapContext ctx(k);
    const std::string space_name = j.at("space").get<std::string>();
    Space space;
    if (space_name == "domain")
        space = Space::domain;
    else if (space_name == "codomain")
        space = Space::codomain;
    else
        throw std::invalid_argument("space must be 'domain' or 'codomain'");
    const VarTablePtr& table =
        space == Space::domain ? ctx.domain_table() : ctx.codomain_table();

    VectorField f{space, {}, j.at("label").get<std::string>()};
    for (const auto& c : j.at("components")) f.components.push_back(poly_from_json(c, table));
    const std::size_t expect = space == Space::domain ? ctx.domain_dim() : ctx.codomain_dim();
    if (f.components.size() != expect)
        throw std::invalid_argument("field JSON has the wrong component count");
    return {k, std::move(f)};
}

Json context_json(const CrossCapContext& ctx) {
    Json weights = Json::object();
    for (std::size_t i = 0; i < ctx.domain_dim(); ++i)
        weights[ctx.domain_table()->name(i)] = ctx.domain_table()->weight(i);
    Json degrees = Json::object();
    for (std::size_t i = 0; i < ctx.codomain_dim(); ++i)
        degrees[ctx.codomain_table()->name(i)] = ctx.codomain_table()->weight(i);
    return Json{{"k", ctx.k()},
                {"domain", ctx.domain_table()->names()},
                {"codomain", ctx.codomain_table()->names()},
                {"weights", std::move(weights)},
                {"degrees", std::move(degrees)}};
}

namespace {

std::vector<Rational> rational_array(const Json& j, const char* key, std::size_t expect) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != expect)
        throw std::invalid_argument(std::string("'") + key + "' must be an array of " +
                                    std::to_string(expect) + " rational strings");
    std::vector<Rational> out;
    for (const auto& v : j[key]) out.push_back(parse_rational(v.get<std::string>()));
    return out;
}

}  // namespace

LinearFunction linear_function_from_json(const CrossCapContext& ctx, const Json& j) {
    const int k = ctx.k();
    auto alpha = rational_array(j, "alpha", static_cast<std::size_t>(k - 2));
    auto beta = rational_array(j, "beta", static_cast<std::size_t>(k - 1));
    const Rational g1 = parse_rational(j.at("gamma1").get<std::string>());
    const Rational g2 = parse_rational(j.at("gamma2").get<std::string>());
    return make_linear_function(ctx, std::move(alpha), std::move(beta), g1, g2);
}

Json linear_function_json(const LinearFunction& h) {
    Json alpha = Json::array();
    for (const auto& a : h.alpha) alpha.push_back(to_string(a));
    Json beta = Json::array();
    for (const auto& b : h.beta) beta.push_back(to_string(b));
    return Json{{"alpha", std::move(alpha)},
                {"beta", std::move(beta)},
                {"gamma1", to_string(h.gamma1)},
                {"gamma2", to_string(h.gamma2)}};
}

}  // namespace liftvf
