#include "almostrep/invariants.hpp"

#include <cmath>

#include "json.hpp"

namespace ar::invariants {

using groups::GroupElement;
using matkit::CMatrix;
using matkit::cplx;

namespace {

constexpr double TWO_PI = 6.283185307179586476925286766559;

// rho(a) rho(b) rho(ab)^{-1}; the inverse is the adjoint since values are unitary
CMatrix defect_unitary(const reps::RepExpr& expr, const GroupElement& a, const GroupElement& b) {
    return matkit::mul(reps::eval(expr, a),
                       matkit::mul(reps::eval(expr, b),
                                   matkit::adjoint(reps::eval(expr, groups::mul(a, b)))));
}

double omega_value(const reps::RepExpr& expr, const GroupElement& a, const GroupElement& b,
                   const matkit::Tolerances& tol) {
    cplx t = matkit::tr_log_unitary(defect_unitary(expr, a, b), tol);
    cplx w = t / cplx(0, TWO_PI);
    if (std::abs(w.imag()) > 1e-9)
        throw check_failure("omega: trace log of a unitary was not purely imaginary");
    return w.real();
}

// commutator product of the evaluated word letters
CMatrix word_commutator_product(const reps::RepExpr& expr, const homology::HopfWord& word) {
    if (word.group != expr.group) throw bad_input("word group does not match the expression");
    CMatrix acc = matkit::identity(static_cast<int>(reps::dim(expr)));
    for (const auto& [aw, bw] : word.pairs) {
        CMatrix A = reps::eval(expr, homology::eval_word(word, aw));
        CMatrix B = reps::eval(expr, homology::eval_word(word, bw));
        CMatrix comm = matkit::mul(A, matkit::mul(B, matkit::mul(matkit::adjoint(A), matkit::adjoint(B))));
        acc = matkit::mul(acc, comm);
    }
    return acc;
}

PairingResult snap(double raw, const std::string& method, const matkit::Tolerances& tol,
                   bool allow_snap = true) {
    PairingResult r;
    r.raw = raw;
    r.method = method;
    double nearest = std::round(raw);
    r.residual = std::abs(raw - nearest);
    if (allow_snap && r.residual < tol.integer_snap) r.snapped = static_cast<long long>(nearest);
    return r;
}

} // namespace

void OmegaTable::set(const GroupElement& a, const GroupElement& b, double v) {
    if (a.group != group_ || b.group != group_) throw bad_input("omega table: wrong group");
    table_[{a, b}] = v;
}

bool OmegaTable::covers(const GroupElement& a, const GroupElement& b) const {
    return table_.count({a, b}) > 0;
}

double OmegaTable::operator()(const GroupElement& a, const GroupElement& b) const {
    auto it = table_.find({a, b});
    if (it == table_.end()) throw check_failure("omega table: lookup outside declared support");
    return it->second;
}

OmegaTable omega(const reps::RepExpr& expr,
                 const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                 const matkit::Tolerances& tol) {
    OmegaTable t(expr.group);
    for (const auto& [a, b] : pairs) t.set(a, b, omega_value(expr, a, b, tol));
    return t;
}

std::string PairingResult::to_json() const {
    nlohmann::json j;
    j["raw"] = raw;
    if (snapped)
        j["snapped"] = *snapped;
    else
        j["snapped"] = nullptr;
    j["residual"] = residual;
    j["method"] = method;
    return j.dump();
}

PairingResult pair_bar(const reps::RepExpr& expr, const homology::Chain& cycle,
                       const matkit::Tolerances& tol, bool require_cycle) {
    if (cycle.degree() != 2) throw bad_input("pair_bar: a 2-chain is required");
    if (cycle.group() != expr.group) throw bad_input("pair_bar: chain group does not match");
    bool cyc = homology::is_cycle(cycle);
    if (require_cycle && !cyc) throw bad_input("pair_bar: chain is not a 2-cycle");
    double acc = 0.0;
    for (const auto& [cell, coeff] : cycle.terms())
        acc += rat_to_double(coeff) * omega_value(expr, cell[0], cell[1], tol);
    return snap(acc, "bar", tol, cyc);
}

PairingResult pair_hopf(const reps::RepExpr& expr, const homology::HopfWord& word,
                        const matkit::Tolerances& tol) {
    if (!homology::commutator_product(word).is_identity())
        throw bad_input("pair_hopf: commutator product does not evaluate to the identity");
    CMatrix m = word_commutator_product(expr, word);
    cplx t = matkit::tr_log_unitary(m, tol);
    return snap((t / cplx(0, TWO_PI)).real(), "hopf", tol);
}

int winding_det(const reps::RepExpr& expr, const homology::HopfWord& word,
                const matkit::Tolerances& tol) {
    if (!homology::commutator_product(word).is_identity())
        throw bad_input("winding_det: commutator product does not evaluate to the identity");
    CMatrix m = word_commutator_product(expr, word);
    const int n = m.rows();
    cplx dm = matkit::det(m);
    if (std::abs(dm - 1.0) > 1e-6)
        throw check_failure("winding_det: det of the commutator product is not 1");

    auto loop_det = [&](double t) {
        CMatrix a = matkit::scale(m, t);
        for (int i = 0; i < n; ++i) a(i, i) += (1.0 - t);
        cplx d = matkit::det(a);
        if (std::abs(d) < 1e-8) throw check_failure("winding_det: loop passes too close to 0");
        return d;
    };

    // samples (t, det) kept sorted by t; refine while any adjacent phase step
    // reaches pi/2
    std::vector<std::pair<double, cplx>> samples;
    const int initial = 64;
    for (int i = 0; i <= initial; ++i) {
        double t = static_cast<double>(i) / initial;
        samples.emplace_back(t, loop_det(t));
    }
    const std::size_t hard_cap = 1u << 20;
    bool refined = true;
    while (refined) {
        refined = false;
        std::vector<std::pair<double, cplx>> next;
        next.reserve(samples.size() * 2);
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            next.push_back(samples[i]);
            double dphi = std::arg(samples[i + 1].second / samples[i].second);
            if (std::abs(dphi) >= 1.5707963267948966) {
                if (samples.size() >= hard_cap)
                    throw check_failure("winding_det: sample cap reached without resolving the loop");
                double tm = 0.5 * (samples[i].first + samples[i + 1].first);
                next.emplace_back(tm, loop_det(tm));
                refined = true;
            }
        }
        next.push_back(samples.back());
        samples.swap(next);
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        total += std::arg(samples[i + 1].second / samples[i].second);
    double wn = total / TWO_PI;
    long long wi = std::llround(wn);
    if (std::abs(wn - static_cast<double>(wi)) > 1e-6)
        throw check_failure("winding_det: accumulated phase is not an integer multiple of 2 pi");
    return static_cast<int>(wi);
}

double cocycle_residual_numeric(const reps::RepExpr& expr,
                                const std::vector<std::array<GroupElement, 3>>& triples,
                                const matkit::Tolerances& tol) {
    double worst = 0.0;
    for (const auto& [a, b, c] : triples) {
        GroupElement ab = groups::mul(a, b);
        GroupElement bc = groups::mul(b, c);
        double r = omega_value(expr, a, b, tol) + omega_value(expr, ab, c, tol) -
                   omega_value(expr, a, bc, tol) - omega_value(expr, b, c, tol);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

} // namespace ar::invariants
