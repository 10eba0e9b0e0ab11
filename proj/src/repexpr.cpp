#include "almostrep/repexpr.hpp"

#include "json.hpp"

namespace ar::reps {

using groups::GroupHom;
using groups::GroupId;
using nlohmann::json;

namespace {

void require_odd_ess(int n) {
    if (n < 3 || n % 2 == 0) throw bad_input("ESS leaves require odd n >= 3");
}

} // namespace

RepExpr voiculescu(int n) {
    if (n < 1) throw bad_input("voiculescu: n >= 1 required");
    RepExpr e;
    e.kind = RepExpr::Kind::Voiculescu;
    e.n = n;
    e.group = groups::free_abelian(2);
    return e;
}

RepExpr ess_rho(int n) {
    require_odd_ess(n);
    RepExpr e;
    e.kind = RepExpr::Kind::ESSRho;
    e.n = n;
    e.group = groups::heisenberg();
    return e;
}

RepExpr ess_rho_tilde(int n) {
    require_odd_ess(n);
    RepExpr e;
    e.kind = RepExpr::Kind::ESSRhoTilde;
    e.n = n;
    e.group = groups::heisenberg();
    return e;
}

RepExpr trivial(int k, const GroupId& g) {
    if (k < 0) throw bad_input("trivial: size must be nonnegative");
    RepExpr e;
    e.kind = RepExpr::Kind::Trivial;
    e.n = k;
    e.group = g;
    return e;
}

RepExpr sum(std::vector<RepExpr> parts) {
    if (parts.empty()) throw bad_input("sum: needs parts");
    for (const auto& p : parts)
        if (p.group != parts[0].group) throw bad_input("sum: parts must share a group");
    RepExpr e;
    e.kind = RepExpr::Kind::Sum;
    e.group = parts[0].group;
    e.children = std::move(parts);
    return e;
}

RepExpr tensor(std::vector<RepExpr> parts) {
    if (parts.empty()) throw bad_input("tensor: needs parts");
    for (const auto& p : parts)
        if (p.group != parts[0].group) throw bad_input("tensor: parts must share a group");
    RepExpr e;
    e.kind = RepExpr::Kind::Tensor;
    e.group = parts[0].group;
    e.children = std::move(parts);
    return e;
}

RepExpr conj(RepExpr inner) {
    RepExpr e;
    e.kind = RepExpr::Kind::Conj;
    e.group = inner.group;
    e.children.push_back(std::move(inner));
    return e;
}

RepExpr pullback(const GroupHom& f, RepExpr inner) {
    if (f.target != inner.group) throw bad_input("pullback: hom target must be the child's group");
    RepExpr e;
    e.kind = RepExpr::Kind::Pullback;
    e.group = f.source;
    e.hom = f;
    e.children.push_back(std::move(inner));
    return e;
}

RepExpr amplify(int r, RepExpr inner) {
    if (r < 0) throw bad_input("amplify: multiplicity must be nonnegative");
    RepExpr e;
    e.kind = RepExpr::Kind::Amplify;
    e.n = r;
    e.group = inner.group;
    e.children.push_back(std::move(inner));
    return e;
}

std::int64_t dim(const RepExpr& e) {
    switch (e.kind) {
        case RepExpr::Kind::Voiculescu:
        case RepExpr::Kind::ESSRho:
        case RepExpr::Kind::ESSRhoTilde:
        case RepExpr::Kind::Trivial:
            return e.n;
        case RepExpr::Kind::Sum: {
            std::int64_t d = 0;
            for (const auto& c : e.children) d += dim(c);
            return d;
        }
        case RepExpr::Kind::Tensor: {
            std::int64_t d = 1;
            for (const auto& c : e.children) d *= dim(c);
            return d;
        }
        case RepExpr::Kind::Conj:
        case RepExpr::Kind::Pullback:
            return dim(e.children[0]);
        case RepExpr::Kind::Amplify:
            return e.n * dim(e.children[0]);
    }
    return 0;
}

namespace {

json group_to_json(const GroupId& g) {
    switch (g.kind) {
        case GroupId::Kind::FreeAbelian: return {{"kind", "free_abelian"}, {"rank", g.rank}};
        case GroupId::Kind::Heisenberg: return {{"kind", "heisenberg"}};
        case GroupId::Kind::Product: {
            json factors = json::array();
            for (const auto& f : g.factors) factors.push_back(group_to_json(f));
            return {{"kind", "product"}, {"factors", factors}};
        }
    }
    return {};
}

GroupId group_from_json(const json& j) {
    std::string kind = j.at("kind");
    if (kind == "free_abelian") return groups::free_abelian(j.at("rank"));
    if (kind == "heisenberg") return groups::heisenberg();
    if (kind == "product") {
        std::vector<GroupId> factors;
        for (const auto& f : j.at("factors")) factors.push_back(group_from_json(f));
        return groups::product(factors);
    }
    throw bad_input("unknown group kind '" + kind + "'");
}

json hom_to_json(const GroupHom& f) {
    json j;
    j["source"] = group_to_json(f.source);
    switch (f.kind) {
        case GroupHom::Kind::AbelianMatrix:
            j["kind"] = "abelian_matrix";
            j["target"] = group_to_json(f.target);
            j["matrix"] = f.matrix;
            break;
        case GroupHom::Kind::Projection:
            j["kind"] = "projection";
            j["factor"] = f.factor_index;
            break;
        case GroupHom::Kind::Alpha1: j["kind"] = "alpha1"; break;
        case GroupHom::Kind::Alpha2: j["kind"] = "alpha2"; break;
        case GroupHom::Kind::EtaAuto: j["kind"] = "eta"; break;
        case GroupHom::Kind::Tuple: {
            j["kind"] = "tuple";
            json parts = json::array();
            for (const auto& p : f.parts) parts.push_back(hom_to_json(p));
            j["parts"] = parts;
            break;
        }
        case GroupHom::Kind::Compose: {
            j["kind"] = "compose";
            json parts = json::array();
            for (const auto& p : f.parts) parts.push_back(hom_to_json(p));
            j["parts"] = parts;
            break;
        }
    }
    return j;
}

GroupHom hom_from_json(const json& j) {
    std::string kind = j.at("kind");
    GroupId source = group_from_json(j.at("source"));
    if (kind == "abelian_matrix")
        return groups::hom_abelian_matrix(source, group_from_json(j.at("target")),
                                          j.at("matrix").get<std::vector<std::vector<std::int64_t>>>());
    if (kind == "projection") return groups::hom_projection(source, j.at("factor"));
    if (kind == "alpha1") return groups::hom_alpha1();
    if (kind == "alpha2") return groups::hom_alpha2();
    if (kind == "eta") return groups::hom_eta_auto();
    if (kind == "tuple" || kind == "compose") {
        std::vector<GroupHom> parts;
        for (const auto& p : j.at("parts")) parts.push_back(hom_from_json(p));
        return kind == "tuple" ? groups::hom_tuple(std::move(parts)) : groups::hom_compose(std::move(parts));
    }
    throw bad_input("unknown hom kind '" + kind + "'");
}

json expr_to_json(const RepExpr& e) {
    json j;
    switch (e.kind) {
        case RepExpr::Kind::Voiculescu: return {{"type", "voiculescu"}, {"n", e.n}};
        case RepExpr::Kind::ESSRho: return {{"type", "ess_rho"}, {"n", e.n}};
        case RepExpr::Kind::ESSRhoTilde: return {{"type", "ess_rho_tilde"}, {"n", e.n}};
        case RepExpr::Kind::Trivial:
            return {{"type", "trivial"}, {"k", e.n}, {"group", group_to_json(e.group)}};
        case RepExpr::Kind::Sum:
        case RepExpr::Kind::Tensor: {
            json parts = json::array();
            for (const auto& c : e.children) parts.push_back(expr_to_json(c));
            return {{"type", e.kind == RepExpr::Kind::Sum ? "sum" : "tensor"}, {"terms", parts}};
        }
        case RepExpr::Kind::Conj:
            return {{"type", "conj"}, {"child", expr_to_json(e.children[0])}};
        case RepExpr::Kind::Pullback:
            return {{"type", "pullback"}, {"hom", hom_to_json(*e.hom)}, {"child", expr_to_json(e.children[0])}};
        case RepExpr::Kind::Amplify:
            return {{"type", "amplify"}, {"r", e.n}, {"child", expr_to_json(e.children[0])}};
    }
    return j;
}

RepExpr expr_from_json(const json& j) {
    std::string type = j.at("type");
    if (type == "voiculescu") return voiculescu(j.at("n"));
    if (type == "ess_rho") return ess_rho(j.at("n"));
    if (type == "ess_rho_tilde") return ess_rho_tilde(j.at("n"));
    if (type == "trivial") return trivial(j.at("k"), group_from_json(j.at("group")));
    if (type == "sum" || type == "tensor") {
        std::vector<RepExpr> parts;
        for (const auto& t : j.at("terms")) parts.push_back(expr_from_json(t));
        return type == "sum" ? sum(std::move(parts)) : tensor(std::move(parts));
    }
    if (type == "conj") return conj(expr_from_json(j.at("child")));
    if (type == "pullback") return pullback(hom_from_json(j.at("hom")), expr_from_json(j.at("child")));
    if (type == "amplify") return amplify(j.at("r"), expr_from_json(j.at("child")));
    throw bad_input("unknown expression type '" + type + "'");
}

} // namespace

std::string repexpr_to_json(const RepExpr& e) { return expr_to_json(e).dump(); }

RepExpr repexpr_from_json(const std::string& text) {
    return expr_from_json(json::parse(text));
}

} // namespace ar::reps
