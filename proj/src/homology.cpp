#include "almostrep/homology.hpp"

#include <array>

#include "json.hpp"

#include "almostrep/literals.hpp"
#include "parallel.hpp"

namespace ar::homology {
namespace {
std::size_t detail_worker_slots() { return static_cast<std::size_t>(detail::worker_count()); }
} // namespace
} // namespace ar::homology

namespace ar::homology {

using groups::GroupElement;
using groups::GroupId;
using groups::identity;
using groups::inv;
using groups::mul;

void Chain::add_term(const Cell& cell, const Rat& coeff) {
    if (static_cast<int>(cell.size()) != degree_) throw bad_input("chain term has wrong degree");
    for (const auto& g : cell)
        if (g.group != group_) throw bad_input("chain term not in the chain's group");
    auto it = terms_.find(cell);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(cell, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& o) {
    if (group_ != o.group_ || degree_ != o.degree_) throw bad_input("chain sum: mismatched group or degree");
    for (const auto& [cell, coeff] : o.terms_) add_term(cell, coeff);
    return *this;
}

Chain Chain::operator+(const Chain& o) const {
    Chain r = *this;
    r += o;
    return r;
}

Chain Chain::operator-() const { return *this * Rat(-1); }

Chain Chain::operator-(const Chain& o) const { return *this + (-o); }

Chain Chain::operator*(const Rat& s) const {
    Chain r(group_, degree_);
    if (s == 0) return r;
    for (const auto& [cell, coeff] : terms_) r.terms_.emplace(cell, coeff * s);
    return r;
}

Chain chain(const GroupId& g, int degree, const std::vector<std::pair<Cell, Rat>>& terms) {
    Chain c(g, degree);
    for (const auto& [cell, coeff] : terms) c.add_term(cell, coeff);
    return c;
}

Cochain Cochain::closed_form(GroupId group, int degree, std::function<Rat(const Cell&)> fn) {
    Cochain c;
    c.group_ = std::move(group);
    c.degree_ = degree;
    c.tabulated_ = false;
    c.fn_ = std::move(fn);
    return c;
}

Cochain Cochain::closed_form_int2(GroupId group, std::function<Rat(const Cell&)> fn, IntFn2 fast) {
    Cochain c = closed_form(std::move(group), 2, std::move(fn));
    c.int_fn_ = std::move(fast);
    return c;
}

Cochain Cochain::tabulated(GroupId group, int degree, std::map<Cell, Rat> table) {
    Cochain c;
    c.group_ = std::move(group);
    c.degree_ = degree;
    c.tabulated_ = true;
    c.table_ = std::move(table);
    return c;
}

Rat Cochain::operator()(const Cell& cell) const {
    if (static_cast<int>(cell.size()) != degree_) throw bad_input("cochain evaluated at wrong degree");
    if (!tabulated_) return fn_(cell);
    auto it = table_.find(cell);
    if (it == table_.end()) throw check_failure("tabulated cochain: lookup outside declared support");
    return it->second;
}

bool Cochain::covers(const Cell& cell) const {
    return !tabulated_ || table_.count(cell) > 0;
}

Chain boundary2(const Chain& c) {
    if (c.degree() != 2) throw bad_input("boundary2: degree 2 chain required");
    Chain out(c.group(), 1);
    for (const auto& [cell, k] : c.terms()) {
        const GroupElement& a = cell[0];
        const GroupElement& b = cell[1];
        out.add_term({a}, k);
        out.add_term({mul(a, b)}, -k);
        out.add_term({b}, k);
    }
    return out;
}

Chain boundary3(const Chain& c) {
    if (c.degree() != 3) throw bad_input("boundary3: degree 3 chain required");
    Chain out(c.group(), 2);
    for (const auto& [cell, k] : c.terms()) {
        const GroupElement& a = cell[0];
        const GroupElement& b = cell[1];
        const GroupElement& g = cell[2];
        out.add_term({b, g}, k);
        out.add_term({mul(a, b), g}, -k);
        out.add_term({a, mul(b, g)}, k);
        out.add_term({a, b}, -k);
    }
    return out;
}

bool is_cycle(const Chain& c) {
    if (c.degree() == 2) return boundary2(c).is_zero();
    if (c.degree() == 3) return boundary3(c).is_zero();
    throw bad_input("is_cycle: only degrees 2 and 3 are supported");
}

GroupElement eval_word(const HopfWord& w, const FreeWord& word) {
    GroupElement acc = identity(w.group);
    for (const auto& [name, exp] : word.syllables) {
        auto it = w.eval_map.find(name);
        if (it == w.eval_map.end()) throw bad_input("hopf word: unbound free generator '" + name + "'");
        acc = mul(acc, groups::power(it->second, exp));
    }
    return acc;
}

GroupElement commutator_product(const HopfWord& w) {
    GroupElement acc = identity(w.group);
    for (const auto& [aw, bw] : w.pairs)
        acc = mul(acc, groups::commutator(eval_word(w, aw), eval_word(w, bw)));
    return acc;
}

Chain hopf_to_bar(const HopfWord& w) {
    if (!commutator_product(w).is_identity())
        throw bad_input("hopf_to_bar: commutator product does not evaluate to the identity");
    Chain out(w.group, 2);
    GroupElement I = identity(w.group);  // I_{i-1}
    for (const auto& [aw, bw] : w.pairs) {
        GroupElement A = eval_word(w, aw);
        GroupElement B = eval_word(w, bw);
        GroupElement Inext = mul(I, groups::commutator(A, B));
        out.add_term({I, A}, 1);
        out.add_term({mul(I, A), B}, 1);
        out.add_term({mul(mul(mul(I, A), B), inv(A)), A}, -1);
        out.add_term({Inext, B}, -1);
        I = Inext;
    }
    return out;
}

Rat kronecker(const Cochain& f, const Chain& c) {
    if (f.group() != c.group() || f.degree() != c.degree())
        throw bad_input("kronecker: cochain and chain must share group and degree");
    Rat acc = 0;
    for (const auto& [cell, k] : c.terms()) acc += k * f(cell);
    return acc;
}

Rat cocycle_residual(const Cochain& f, const std::vector<std::array<GroupElement, 3>>& triples) {
    if (f.degree() != 2) throw bad_input("cocycle_residual: degree 2 cochain required");
    Rat worst = 0;
    for (const auto& [a, b, c] : triples) {
        Rat r = f({b, c}) - f({mul(a, b), c}) + f({a, mul(b, c)}) - f({a, b});
        if (r < 0) r = -r;
        if (r > worst) worst = r;
    }
    return worst;
}

Rat cocycle_residual_box(const Cochain& f, int box) {
    if (f.degree() != 2) throw bad_input("cocycle_residual_box: degree 2 cochain required");
    auto pts = groups::coordinate_box(f.group(), box, 5000);
    const std::size_t n = pts.size();

    if (f.int_fn()) {
        const auto& eval = f.int_fn();
        const GroupId grp = f.group();
        const std::size_t dim = static_cast<std::size_t>(grp.coord_size());
        std::vector<std::int64_t> flat(n * dim);
        for (std::size_t i = 0; i < n; ++i)
            std::copy(pts[i].coords.begin(), pts[i].coords.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * dim));
        auto pt = [&](std::size_t i) { return flat.data() + i * dim; };

        // Distinct pairwise products; everything in the sweep reduces to table
        // lookups against them.
        std::map<std::vector<std::int64_t>, std::size_t> prod_index;
        std::vector<std::size_t> prod_of(n * n);
        std::vector<std::int64_t> prods;
        {
            std::vector<std::int64_t> buf(dim);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    groups::mul_into(grp, pt(i), pt(j), buf.data());
                    auto [it, inserted] = prod_index.try_emplace(buf, prods.size() / dim);
                    if (inserted) prods.insert(prods.end(), buf.begin(), buf.end());
                    prod_of[i * n + j] = it->second;
                }
        }
        const std::size_t P = prods.size() / dim;
        auto prod_pt = [&](std::size_t p) { return prods.data() + p * dim; };

        std::vector<std::int64_t> pair_table(n * n);   // f(a,b), a,b in the box
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) pair_table[i * n + j] = eval(pt(i), pt(j));
        std::vector<std::int64_t> prod_left(P * n);    // f(ab, c)
        for (std::size_t p = 0; p < P; ++p)
            for (std::size_t j = 0; j < n; ++j) prod_left[p * n + j] = eval(prod_pt(p), pt(j));
        std::vector<std::int64_t> prod_right(n * P);   // f(a, bc)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < P; ++p) prod_right[i * P + p] = eval(pt(i), prod_pt(p));

        std::vector<std::int64_t> worst_per_block(detail_worker_slots(), 0);
        detail::parallel_blocks(n, [&](std::size_t lo, std::size_t hi, int blk) {
            std::int64_t worst = 0;
            for (std::size_t ia = lo; ia < hi; ++ia)
                for (std::size_t ib = 0; ib < n; ++ib) {
                    const std::int64_t f_ab = pair_table[ia * n + ib];
                    const std::int64_t* left = prod_left.data() + prod_of[ia * n + ib] * n;
                    const std::size_t* bcrow = prod_of.data() + ib * n;
                    const std::int64_t* right = prod_right.data() + ia * P;
                    const std::int64_t* fbc = pair_table.data() + ib * n;
                    for (std::size_t ic = 0; ic < n; ++ic) {
                        std::int64_t r = fbc[ic] - left[ic] + right[bcrow[ic]] - f_ab;
                        if (r < 0) r = -r;
                        if (r > worst) worst = r;
                    }
                }
            worst_per_block[static_cast<std::size_t>(blk)] = worst;
        });
        std::int64_t worst = 0;
        for (std::int64_t w : worst_per_block) worst = std::max(worst, w);
        return Rat(worst);
    }

    Rat worst = 0;
    for (const auto& a : pts)
        for (const auto& b : pts) {
            GroupElement ab = mul(a, b);
            Rat f_ab = f({a, b});
            for (const auto& c : pts) {
                Rat r = f({b, c}) - f({ab, c}) + f({a, mul(b, c)}) - f_ab;
                if (r < 0) r = -r;
                if (r > worst) worst = r;
            }
        }
    return worst;
}

Cochain normalize_cocycle(const Cochain& f) {
    GroupElement e = identity(f.group());
    return Cochain::closed_form(f.group(), 2, [f, e](const Cell& cell) {
        const GroupElement& a = cell[0];
        const GroupElement& b = cell[1];
        // gamma(x) = -f(e,x); result = f + d(gamma)
        return f(cell) - f({e, a}) + f({e, mul(a, b)}) - f({e, b});
    });
}

namespace {

Rat beta1_val(const GroupElement& x, const GroupElement& y) {
    Rat x2 = x.coords[1], x3 = x.coords[2], y1 = y.coords[0];
    return x3 * y1 + Rat(1, 2) * x2 * y1 * (y1 - 1);
}

Rat beta2_val(const GroupElement& x, const GroupElement& y) {
    Rat x1 = x.coords[0], x2 = x.coords[1], x3 = x.coords[2], y2 = y.coords[1];
    return (x1 * x2 - x3) * y2 + Rat(1, 2) * x1 * y2 * (y2 - 1);
}

H3Fixtures build_fixtures() {
    GroupId h3 = groups::heisenberg();
    auto el = [&](const std::string& s) { return literals::parse_element(h3, s); };

    auto beta1_int = [](const std::int64_t* x, const std::int64_t* y) {
        return x[2] * y[0] + x[1] * (y[0] * (y[0] - 1) / 2);
    };
    auto beta2_int = [](const std::int64_t* x, const std::int64_t* y) {
        return (x[0] * x[1] - x[2]) * y[1] + x[0] * (y[1] * (y[1] - 1) / 2);
    };

    H3Fixtures fx{
        Cochain::closed_form(h3, 1, [](const Cell& c) { return Rat(c[0].coords[0]); }),
        Cochain::closed_form(h3, 1, [](const Cell& c) { return Rat(c[0].coords[1]); }),
        Cochain::closed_form_int2(h3, [](const Cell& c) { return beta1_val(c[0], c[1]); }, beta1_int),
        Cochain::closed_form_int2(h3, [](const Cell& c) { return beta2_val(c[0], c[1]); }, beta2_int),
        Cochain::closed_form(h3, 3, [](const Cell& c) { return beta1_val(c[0], c[1]) * c[2].coords[1]; }),
        Cochain::closed_form(h3, 3, [](const Cell& c) { return beta1_val(c[0], c[1]) * c[2].coords[0]; }),
        Cochain::closed_form(h3, 3, [](const Cell& c) { return beta2_val(c[0], c[1]) * c[2].coords[0]; }),
        Cochain::closed_form(h3, 3, [](const Cell& c) { return beta2_val(c[0], c[1]) * c[2].coords[1]; }),
        chain(h3, 1, {{{el("a")}, 1}}),
        chain(h3, 1, {{{el("b")}, 1}}),
        chain(h3, 2, {{{el("c"), el("a")}, 1}, {{el("a"), el("c")}, -1}}),
        chain(h3, 2, {{{el("b"), el("c")}, 1}, {{el("c"), el("b")}, -1}}),
        chain(h3, 3,
              {{{el("c^-1"), el("b c"), el("a b^-1 c^-1")}, 1},
               {{el("b c"), el("a b^-1 c^-1"), el("a^-1 b c^-1")}, 1},
               {{el("a b^-1 c^-1"), el("a^-1 b c^-1"), el("a c")}, 1},
               {{el("a^-1 b c^-1"), el("a c"), el("c^-1")}, 1},
               {{el("a c"), el("a^-1 b c^-1"), el("a b^-1 c^-1")}, -1},
               {{el("a^-1 b c^-1"), el("a b^-1 c^-1"), el("b c")}, -1}}),
    };
    return fx;
}

} // namespace

const Chain& H3Fixtures::chain_by_name(const std::string& name) const {
    if (name == "A1") return A1;
    if (name == "A2") return A2;
    if (name == "B1") return B1;
    if (name == "B2") return B2;
    if (name == "C") return C;
    throw bad_input("unknown fixture chain '" + name + "'");
}

const Cochain& H3Fixtures::cochain_by_name(const std::string& name) const {
    if (name == "alpha1") return alpha1;
    if (name == "alpha2") return alpha2;
    if (name == "beta1") return beta1;
    if (name == "beta2") return beta2;
    if (name == "gamma") return gamma;
    if (name == "gamma11") return gamma11;
    if (name == "gamma21") return gamma21;
    if (name == "gamma22") return gamma22;
    throw bad_input("unknown fixture cochain '" + name + "'");
}

const H3Fixtures& h3_fixtures() {
    static const H3Fixtures fx = build_fixtures();
    return fx;
}

std::string chain_to_json(const Chain& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [cell, coeff] : c.terms()) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& g : cell) cells.push_back(literals::format_element(g));
        arr.push_back({{"cells", cells}, {"coeff", coeff.str()}});
    }
    return arr.dump();
}

} // namespace ar::homology
