#include "qplane/serialize.hpp"

#include "qplane/parse.hpp"

#include <sstream>

namespace qplane {

namespace {

QScalar scalar_from_text(const Json& j) {
    return parse_scalar_expression(j.get<std::string>());
}

Json poly_to_json(const QPoly& p) {
    Json arr = Json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coefficient(k).str());
    return arr;
}

QPoly poly_from_json(const Json& j) {
    QPoly p;
    int k = 0;
    for (const auto& c : j) p.set_coefficient(k++, scalar_from_text(c));
    return p;
}

std::string float_text(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

Json element_to_json(const PlaneElement& a) {
    Json terms = Json::array();
    for (const auto& [m, c] : a.terms())
        terms.push_back({{"y", m.y_deg}, {"x", m.x_deg}, {"coeff", c.str()}});
    return {{"terms", terms}};
}

PlaneElement element_from_json(const Json& j) {
    PlaneElement a;
    for (const auto& t : j.at("terms"))
        a += PlaneElement::monomial(Monomial{t.at("y").get<int>(), t.at("x").get<int>()},
                                    scalar_from_text(t.at("coeff")));
    return a;
}

Json omega_to_json(const OmegaUElement& a) {
    Json u = Json::array();
    for (const auto& [jj, c] : a.pure_u) u.push_back({{"j", jj}, {"coeff", c.str()}});
    Json x = Json::array();
    for (const auto& [k, c] : a.x_part)
        x.push_back({{"i", k.i}, {"j", k.j}, {"coeff", c.str()}});
    Json y = Json::array();
    for (const auto& [k, c] : a.y_part)
        y.push_back({{"i", k.i}, {"j", k.j}, {"coeff", c.str()}});
    return {{"u", u}, {"x", x}, {"y", y}};
}

OmegaUElement omega_from_json(const Json& j) {
    OmegaUElement a;
    for (const auto& t : j.at("u")) a.add_pure(t.at("j").get<int>(), scalar_from_text(t.at("coeff")));
    for (const auto& t : j.at("x"))
        a.add_x(t.at("i").get<int>(), t.at("j").get<int>(), scalar_from_text(t.at("coeff")));
    for (const auto& t : j.at("y"))
        a.add_y(t.at("i").get<int>(), t.at("j").get<int>(), scalar_from_text(t.at("coeff")));
    return a;
}

Json pairs_to_json(const PairSequence& p) {
    Json levels = Json::array();
    for (const auto& [f, g] : p.levels)
        levels.push_back({{"f", poly_to_json(f)}, {"g", poly_to_json(g)}});
    return {{"convention", p.convention == PairConvention::OmegaPair ? "omega_pair" : "rphixy"},
            {"levels", levels}};
}

PairSequence pairs_from_json(const Json& j) {
    PairSequence p;
    const std::string conv = j.at("convention").get<std::string>();
    if (conv == "omega_pair")
        p.convention = PairConvention::OmegaPair;
    else if (conv == "rphixy")
        p.convention = PairConvention::RPhiXY;
    else
        throw Error("unknown pair convention: " + conv);
    for (const auto& lvl : j.at("levels"))
        p.levels.emplace_back(poly_from_json(lvl.at("f")), poly_from_json(lvl.at("g")));
    return p;
}

Json beta_gamma_to_json(const BetaGammaForm& f) {
    Json beta = Json::array();
    for (const auto& [k, c] : f.beta)
        beta.push_back({{"i", k.i}, {"j", k.j}, {"coeff", c.str()}});
    Json gamma = Json::array();
    for (const auto& [k, c] : f.gamma)
        gamma.push_back({{"i", k.i}, {"j", k.j}, {"coeff", c.str()}});
    return {{"beta", beta}, {"gamma", gamma}};
}

BetaGammaForm beta_gamma_from_json(const Json& j) {
    BetaGammaForm f;
    for (const auto& t : j.at("beta"))
        f.beta[OmegaKey{t.at("i").get<int>(), t.at("j").get<int>()}] =
            scalar_from_text(t.at("coeff"));
    for (const auto& t : j.at("gamma"))
        f.gamma[OmegaKey{t.at("i").get<int>(), t.at("j").get<int>()}] =
            scalar_from_text(t.at("coeff"));
    return f;
}

Json matrix_to_json(const QMatrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) entries.push_back(m.at(i, j).str());
    return {{"dim", m.dim()}, {"scalar", "exact"}, {"entries", entries}};
}

Json matrix_to_json(const CMatrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            entries.push_back(Json::array({m.at(i, j).real(), m.at(i, j).imag()}));
    return {{"dim", m.dim()}, {"scalar", "float"}, {"entries", entries}};
}

Json check_to_json(const CheckResult& r) {
    return {{"name", r.name},
            {"params", r.params},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"status", to_string(r.status)},
            {"details", r.details}};
}

std::string growth_csv(const std::vector<GrowthPoint>& points) {
    std::string out = "n,estimate,reference\n";
    for (const auto& p : points) {
        out += std::to_string(p.n);
        out += ',';
        out += float_text(p.estimate);
        out += ',';
        out += float_text(p.reference);
        out += '\n';
    }
    return out;
}

}  // namespace qplane
