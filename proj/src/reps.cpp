#include "almostrep/reps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "almostrep/literals.hpp"

namespace ar::reps {

using groups::GroupElement;
using matkit::CMatrix;
using matkit::cplx;

namespace {

constexpr double TWO_PI = 6.283185307179586476925286766559;

std::int64_t mod_positive(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

// u^x v^y on Z^2: column j (1-based) carries phase e^{2 pi i j y / n} and
// lands on row j + x mod n.
CMatrix voiculescu_matrix(int n, std::int64_t x, std::int64_t y) {
    CMatrix m(n, n);
    for (int j = 1; j <= n; ++j) {
        std::int64_t phase_num = mod_positive(static_cast<std::int64_t>(j) * y, n);
        int row = static_cast<int>(mod_positive(j + x - 1, n));  // 0-based row of e_{j+x}
        m(row, j - 1) = std::polar(1.0, TWO_PI * static_cast<double>(phase_num) / n);
    }
    return m;
}

// rho_n(x) e_j = exp(2 pi i (x3 j + x2 j(j-1)/2) / n) e_{j + x1}
CMatrix ess_matrix(int n, std::int64_t x1, std::int64_t x2, std::int64_t x3) {
    CMatrix m(n, n);
    for (int j = 1; j <= n; ++j) {
        std::int64_t jj = j;
        std::int64_t num = x3 * jj + x2 * (jj * (jj - 1) / 2);
        std::int64_t phase_num = mod_positive(num, n);
        int row = static_cast<int>(mod_positive(jj + x1 - 1, n));
        m(row, j - 1) = std::polar(1.0, TWO_PI * static_cast<double>(phase_num) / n);
    }
    return m;
}

} // namespace

CMatrix eval(const RepExpr& expr, const GroupElement& g) {
    if (g.group != expr.group) throw bad_input("eval: element not in the expression's group");
    switch (expr.kind) {
        case RepExpr::Kind::Trivial:
            return matkit::identity(expr.n);
        case RepExpr::Kind::Voiculescu:
            return voiculescu_matrix(expr.n, g.coords[0], g.coords[1]);
        case RepExpr::Kind::ESSRho:
            return ess_matrix(expr.n, g.coords[0], g.coords[1], g.coords[2]);
        case RepExpr::Kind::ESSRhoTilde: {
            // rho_n composed with (x1,x2,x3) -> (x2,x1,x1 x2 - x3)
            std::int64_t x1 = g.coords[0], x2 = g.coords[1], x3 = g.coords[2];
            return ess_matrix(expr.n, x2, x1, x1 * x2 - x3);
        }
        case RepExpr::Kind::Sum: {
            CMatrix acc = eval(expr.children[0], g);
            for (std::size_t i = 1; i < expr.children.size(); ++i)
                acc = matkit::dirsum(acc, eval(expr.children[i], g));
            return acc;
        }
        case RepExpr::Kind::Tensor: {
            CMatrix acc = eval(expr.children[0], g);
            for (std::size_t i = 1; i < expr.children.size(); ++i)
                acc = matkit::kron(acc, eval(expr.children[i], g));
            return acc;
        }
        case RepExpr::Kind::Conj: {
            CMatrix m = eval(expr.children[0], g);
            for (auto& z : m.data()) z = std::conj(z);
            return m;
        }
        case RepExpr::Kind::Pullback:
            return eval(expr.children[0], groups::hom_apply(*expr.hom, g));
        case RepExpr::Kind::Amplify:
            return matkit::kron(matkit::identity(expr.n), eval(expr.children[0], g));
    }
    throw bad_input("eval: unknown expression kind");
}

DefectReport defect(const RepExpr& expr, const std::vector<GroupElement>& S) {
    if (S.empty()) throw bad_input("defect: S must be nonempty");
    DefectReport rep;
    rep.arg_a = S[0];
    rep.arg_b = S[0];
    std::vector<CMatrix> evals;
    evals.reserve(S.size());
    for (const auto& s : S) evals.push_back(eval(expr, s));
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j < S.size(); ++j) {
            CMatrix prod_eval = eval(expr, groups::mul(S[i], S[j]));
            double d = matkit::op_norm(matkit::sub(prod_eval, matkit::mul(evals[i], evals[j])));
            rep.table.emplace_back(S[i], S[j], d);
            if (d > rep.max_defect) {
                rep.max_defect = d;
                rep.arg_a = S[i];
                rep.arg_b = S[j];
            }
        }
    return rep;
}

std::vector<ProjectivityEntry> projectivity_check(
    const RepExpr& expr, const std::vector<std::pair<GroupElement, GroupElement>>& pairs) {
    std::vector<ProjectivityEntry> out;
    for (const auto& [a, b] : pairs) {
        CMatrix d = matkit::mul(eval(expr, a), matkit::mul(eval(expr, b),
                                                           matkit::adjoint(eval(expr, groups::mul(a, b)))));
        const int n = d.rows();
        cplx lambda = matkit::trace(d) / static_cast<double>(n);
        ProjectivityEntry entry{a, b, false, 0.0, 0.0};
        if (std::abs(lambda) > 1e-12) {
            lambda /= std::abs(lambda);
            entry.deviation = matkit::op_norm(matkit::sub(d, matkit::scale(matkit::identity(n), lambda)));
            if (entry.deviation < 1e-8) {
                entry.scalar = true;
                double ph = std::arg(lambda) / TWO_PI;  // in (-1/2, 1/2]
                if (ph <= -0.5) ph += 1.0;
                entry.phase = ph;
            }
        } else {
            entry.deviation = 2.0;
        }
        out.push_back(entry);
    }
    return out;
}

std::string defect_report_csv(const DefectReport& r) {
    std::ostringstream os;
    os << "a,b,defect\n";
    for (const auto& [a, b, d] : r.table) {
        os << '"' << literals::format_element(a) << "\",\"" << literals::format_element(b) << "\",";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", d);
        os << buf << "\n";
    }
    return os.str();
}

} // namespace ar::reps
