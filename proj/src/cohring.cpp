#include "almostrep/cohring.hpp"

#include <algorithm>
#include <mutex>

#include "json.hpp"

namespace ar::cohring {

using groups::GroupElement;
using groups::GroupHom;
using groups::GroupId;

Rat RingElem::coeff(int basis_index) const {
    auto it = coeffs_.find(basis_index);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void RingElem::add_coeff(int basis_index, const Rat& c) {
    if (!ring_) throw bad_input("ring element without a ring");
    if (basis_index < 0 || basis_index >= static_cast<int>(ring_->basis().size()))
        throw bad_input("basis index out of range");
    auto it = coeffs_.find(basis_index);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_.emplace(basis_index, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

RingElem RingElem::operator+(const RingElem& o) const {
    if (ring_ != o.ring_) throw bad_input("ring mismatch in +");
    RingElem r = *this;
    for (const auto& [i, c] : o.coeffs_) r.add_coeff(i, c);
    return r;
}

RingElem RingElem::operator-() const { return *this * Rat(-1); }

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    if (ring_ != o.ring_) throw bad_input("ring mismatch in *");
    RingElem r(ring_);
    for (const auto& [i, ci] : coeffs_)
        for (const auto& [j, cj] : o.coeffs_) {
            RingElem t = ring_->mul_basis(i, j);
            for (const auto& [k, ck] : t.coeffs_) r.add_coeff(k, ci * cj * ck);
        }
    return r;
}

RingElem RingElem::operator*(const Rat& s) const {
    RingElem r(ring_);
    if (s == 0) return r;
    for (const auto& [i, c] : coeffs_) r.coeffs_.emplace(i, c * s);
    return r;
}

bool RingElem::operator==(const RingElem& o) const {
    return ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

RingElem RingElem::degree_part(int degree) const {
    RingElem r(ring_);
    for (const auto& [i, c] : coeffs_)
        if (ring_->basis()[static_cast<std::size_t>(i)].degree == degree) r.coeffs_.emplace(i, c);
    return r;
}

bool RingElem::homogeneous(int degree) const {
    for (const auto& [i, c] : coeffs_)
        if (ring_->basis()[static_cast<std::size_t>(i)].degree != degree) return false;
    return true;
}

std::string RingElem::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + ring_->basis()[static_cast<std::size_t>(i)].name;
    }
    return s;
}

std::string RingElem::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [i, c] : coeffs_) j[ring_->basis()[static_cast<std::size_t>(i)].name] = c.str();
    return j.dump();
}

RingPtr GradedRing::create(GroupId group, std::vector<BasisEntry> basis, int unit_index,
                           std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> table,
                           int top_degree) {
    auto ring = std::shared_ptr<GradedRing>(new GradedRing());
    ring->group_ = std::move(group);
    ring->basis_ = std::move(basis);
    ring->unit_index_ = unit_index;
    ring->table_ = std::move(table);
    ring->top_degree_ = top_degree;
    ring->validate();
    return ring;
}

int GradedRing::basis_index(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return static_cast<int>(i);
    throw bad_input("no basis element named '" + name + "'");
}

RingElem GradedRing::basis_elem(const std::string& name) const {
    RingElem e(shared_from_this());
    e.add_coeff(basis_index(name), 1);
    return e;
}

RingElem GradedRing::unit() const {
    RingElem e(shared_from_this());
    e.add_coeff(unit_index_, 1);
    return e;
}

RingElem GradedRing::zero() const { return RingElem(shared_from_this()); }

RingElem GradedRing::from_rational(const Rat& r) const { return unit() * r; }

RingElem GradedRing::mul_basis(int i, int j) const {
    RingElem e(shared_from_this());
    auto it = table_.find({i, j});
    if (it != table_.end())
        for (const auto& [k, c] : it->second) e.add_coeff(k, c);
    return e;
}

void GradedRing::validate() const {
    const int nb = static_cast<int>(basis_.size());
    auto self = shared_from_this();
    // degree additivity and truncation past the top degree
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            int d = basis_[static_cast<std::size_t>(i)].degree + basis_[static_cast<std::size_t>(j)].degree;
            RingElem p = mul_basis(i, j);
            if (d > top_degree_ && !p.is_zero())
                throw bad_input("ring table: product above the top degree is nonzero");
            for (const auto& [k, c] : p.coeffs())
                if (basis_[static_cast<std::size_t>(k)].degree != d)
                    throw bad_input("ring table: product is not degree additive");
        }
    // graded commutativity
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            int di = basis_[static_cast<std::size_t>(i)].degree;
            int dj = basis_[static_cast<std::size_t>(j)].degree;
            Rat sign = (di * dj) % 2 == 0 ? 1 : -1;
            if (mul_basis(i, j) != mul_basis(j, i) * sign)
                throw bad_input("ring table: graded commutativity fails");
        }
    // unit
    for (int i = 0; i < nb; ++i) {
        RingElem ei(self);
        ei.add_coeff(i, 1);
        if (mul_basis(unit_index_, i) != ei || mul_basis(i, unit_index_) != ei)
            throw bad_input("ring table: unit fails");
    }
    // associativity on all basis triples
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            RingElem ij = mul_basis(i, j);
            for (int k = 0; k < nb; ++k) {
                RingElem ek(self);
                ek.add_coeff(k, 1);
                RingElem ei(self);
                ei.add_coeff(i, 1);
                if (ij * ek != ei * mul_basis(j, k))
                    throw bad_input("ring table: associativity fails");
            }
        }
}

RingPtr exterior_ring(int d, const std::string& prefix) {
    if (d < 1) throw bad_input("exterior_ring: d >= 1 required");
    // basis = subsets of {1..d} encoded as bitmasks, ordered by mask
    const int nb = 1 << d;
    std::vector<GradedRing::BasisEntry> basis;
    for (int mask = 0; mask < nb; ++mask) {
        std::string name;
        for (int i = 0; i < d; ++i)
            if (mask & (1 << i)) {
                if (!name.empty()) name += "^";
                name += (d == 1 && prefix == "e") ? "t" : prefix + std::to_string(i + 1);
            }
        if (name.empty()) name = "1";
        basis.push_back({name, __builtin_popcount(static_cast<unsigned>(mask))});
    }
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> table;
    for (int m1 = 0; m1 < nb; ++m1)
        for (int m2 = 0; m2 < nb; ++m2) {
            if (m1 & m2) continue;  // repeated generator
            // sign: move each generator of m2 past the generators of m1 above it
            int sign = 1;
            for (int i = 0; i < d; ++i)
                if (m2 & (1 << i)) {
                    unsigned higher = static_cast<unsigned>(m1) >> (i + 1);
                    if (__builtin_popcount(higher) % 2 == 1) sign = -sign;
                }
            table[{m1, m2}] = {{m1 | m2, Rat(sign)}};
        }
    auto ring = std::shared_ptr<GradedRing>(new GradedRing());
    ring->group_ = groups::free_abelian(d);
    ring->basis_ = std::move(basis);
    ring->unit_index_ = 0;
    ring->table_ = std::move(table);
    ring->top_degree_ = d;
    for (int i = 0; i < d; ++i) {
        GroupElement gen = groups::identity(ring->group_);
        gen.coords[static_cast<std::size_t>(i)] = 1;
        ring->h1_duals_.emplace_back(1 << i, gen);
    }
    ring->validate();
    return ring;
}

RingPtr h3_ring() {
    // order: 1, alpha1, alpha2, beta1, beta2, gamma
    std::vector<GradedRing::BasisEntry> basis = {
        {"1", 0}, {"alpha1", 1}, {"alpha2", 1}, {"beta1", 2}, {"beta2", 2}, {"gamma", 3}};
    const int U = 0, A1 = 1, A2 = 2, B1 = 3, B2 = 4, G = 5;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> table;
    for (int i = 0; i < 6; ++i) {
        table[{U, i}] = {{i, Rat(1)}};
        if (i != U) table[{i, U}] = {{i, Rat(1)}};
    }
    // alpha_i * alpha_j = 0 for all i,j; beta_i * alpha_j = (1 - delta_ij) gamma
    table[{B1, A2}] = {{G, Rat(1)}};
    table[{A2, B1}] = {{G, Rat(1)}};
    table[{B2, A1}] = {{G, Rat(1)}};
    table[{A1, B2}] = {{G, Rat(1)}};
    auto ring = std::shared_ptr<GradedRing>(new GradedRing());
    ring->group_ = groups::heisenberg();
    ring->basis_ = std::move(basis);
    ring->unit_index_ = U;
    ring->table_ = std::move(table);
    ring->top_degree_ = 3;
    GroupId h3 = groups::heisenberg();
    ring->h1_duals_.emplace_back(A1, groups::element(h3, {1, 0, 0}));
    ring->h1_duals_.emplace_back(A2, groups::element(h3, {0, 1, 0}));
    ring->validate();
    return ring;
}

RingPtr kunneth(const RingPtr& r1, const RingPtr& r2) {
    const int n1 = static_cast<int>(r1->basis().size());
    const int n2 = static_cast<int>(r2->basis().size());
    std::vector<GradedRing::BasisEntry> basis;
    GradedRing::KunnethInfo info;
    info.left = r1;
    info.right = r2;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            std::string name = r1->basis()[static_cast<std::size_t>(i)].name + "*" +
                               r2->basis()[static_cast<std::size_t>(j)].name;
            basis.push_back({name, r1->basis()[static_cast<std::size_t>(i)].degree +
                                       r2->basis()[static_cast<std::size_t>(j)].degree});
            info.pair_of.emplace_back(i, j);
            info.index_of[{i, j}] = static_cast<int>(info.pair_of.size()) - 1;
        }
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> table;
    for (int a = 0; a < n1 * n2; ++a)
        for (int b = 0; b < n1 * n2; ++b) {
            auto [i1, i2] = info.pair_of[static_cast<std::size_t>(a)];
            auto [j1, j2] = info.pair_of[static_cast<std::size_t>(b)];
            RingElem left = r1->mul_basis(i1, j1);
            RingElem right = r2->mul_basis(i2, j2);
            int sign_exp = r1->basis()[static_cast<std::size_t>(j1)].degree *
                           r2->basis()[static_cast<std::size_t>(i2)].degree;
            Rat sign = sign_exp % 2 == 0 ? 1 : -1;
            std::vector<std::pair<int, Rat>> entry;
            for (const auto& [k1, c1] : left.coeffs())
                for (const auto& [k2, c2] : right.coeffs())
                    entry.emplace_back(info.index_of[{k1, k2}], sign * c1 * c2);
            if (!entry.empty()) table[{a, b}] = std::move(entry);
        }
    auto ring = std::shared_ptr<GradedRing>(new GradedRing());
    ring->group_ = groups::product({r1->group(), r2->group()});
    ring->basis_ = std::move(basis);
    ring->unit_index_ = info.index_of[{r1->unit_index(), r2->unit_index()}];
    ring->table_ = std::move(table);
    ring->top_degree_ = r1->top_degree() + r2->top_degree();
    // degree-1 duals are the duals of the factors, padded by identities
    GroupId g2 = r2->group();
    for (const auto& [b1, gen1] : r1->h1_duals()) {
        GroupElement gen = groups::identity(ring->group_);
        std::copy(gen1.coords.begin(), gen1.coords.end(), gen.coords.begin());
        ring->h1_duals_.emplace_back(info.index_of[{b1, r2->unit_index()}], gen);
    }
    int off = r1->group().coord_size();
    for (const auto& [b2, gen2] : r2->h1_duals()) {
        GroupElement gen = groups::identity(ring->group_);
        std::copy(gen2.coords.begin(), gen2.coords.end(), gen.coords.begin() + off);
        ring->h1_duals_.emplace_back(info.index_of[{r1->unit_index(), b2}], gen);
    }
    ring->kunneth_ = std::move(info);
    ring->validate();
    return ring;
}

namespace {

std::string group_key(const GroupId& g) { return g.describe(); }

// Every group maps to one shared ring instance; product rings fold left so a
// projection pullback can walk the Kunneth structure by pointer identity.
RingPtr canonical_ring_impl(const GroupId& g, std::map<std::string, RingPtr>& cache) {
    auto it = cache.find(group_key(g));
    if (it != cache.end()) return it->second;
    RingPtr r;
    if (g.kind == GroupId::Kind::Product) {
        GroupId left_id = g.factors.size() == 2
                              ? g.factors[0]
                              : groups::product(std::vector<GroupId>(g.factors.begin(), g.factors.end() - 1));
        r = kunneth(canonical_ring_impl(left_id, cache), canonical_ring_impl(g.factors.back(), cache));
    } else if (g.kind == GroupId::Kind::Heisenberg) {
        r = h3_ring();
    } else {
        r = exterior_ring(g.rank);
    }
    cache[group_key(g)] = r;
    return r;
}

} // namespace

RingPtr canonical_ring(const GroupId& g) {
    static std::mutex mu;
    static std::map<std::string, RingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    return canonical_ring_impl(g, cache);
}

RingElem exp_deg2(const RingElem& x) {
    if (!x.ring()) throw bad_input("exp_deg2: element has no ring");
    if (!x.homogeneous(2)) throw bad_input("exp_deg2: input must be homogeneous of degree 2");
    RingElem acc = x.ring()->unit();
    RingElem pow = x.ring()->unit();
    Rat fact = 1;
    for (int k = 1; 2 * k <= x.ring()->top_degree(); ++k) {
        pow = pow * x;
        if (pow.is_zero()) break;
        fact *= k;
        acc = acc + pow * (Rat(1) / fact);
    }
    return acc;
}

namespace {

// Embeds an element of the ring of one product factor into the canonical ring
// of the whole product (x -> 1 (x) ... (x) x (x) ... (x) 1).
RingElem embed_factor(const RingElem& x, const RingPtr& target, int factor, int nfactors) {
    if (nfactors == 1) {
        if (x.ring() != target) throw bad_input("embed_factor: ring mismatch");
        return x;
    }
    const auto* info = target->kunneth_info();
    if (!info) throw bad_input("embed_factor: target has no Kunneth structure");
    RingElem out(target);
    if (factor == nfactors - 1) {
        // rightmost factor: unit_left (x) x
        for (const auto& [i, c] : x.coeffs())
            out.add_coeff(info->index_of.at({info->left->unit_index(), i}), c);
    } else {
        RingElem left = embed_factor(x, info->left, factor, nfactors - 1);
        for (const auto& [i, c] : left.coeffs())
            out.add_coeff(info->index_of.at({i, info->right->unit_index()}), c);
    }
    return out;
}

// Writes the hom g -> f(g)_j (j-th coordinate of an integer-valued hom) in the
// degree-1 dual basis of the source ring.
RingElem h1_pullback_coordinate(const GroupHom& f, int j, const RingPtr& source_ring) {
    RingElem out(source_ring);
    if (source_ring->h1_duals().empty())
        throw bad_input("pullback: source ring has no degree-1 duals");
    for (const auto& [b, gen] : source_ring->h1_duals()) {
        GroupElement img = groups::hom_apply(f, gen);
        Rat c = img.coords[static_cast<std::size_t>(j)];
        if (c != 0) out.add_coeff(b, c);
    }
    return out;
}

} // namespace

RingElem pullback_class(const GroupHom& f, const RingElem& x) {
    RingPtr target_ring = x.ring();
    RingPtr source_ring = canonical_ring(f.source);
    if (target_ring != canonical_ring(f.target))
        throw bad_input("pullback_class: element must live in the canonical ring of the hom's target");

    if (f.kind == GroupHom::Kind::Projection) {
        return embed_factor(x, source_ring, f.factor_index,
                            static_cast<int>(f.source.factors.size()));
    }
    if (f.kind == GroupHom::Kind::Compose) {
        RingElem y = x;
        for (auto it = f.parts.rbegin(); it != f.parts.rend(); ++it) y = pullback_class(*it, y);
        return y;
    }
    if (f.kind == GroupHom::Kind::EtaAuto) {
        // eta swaps a and b and inverts c: alpha1 <-> alpha2, beta1 <-> beta2,
        // gamma -> gamma (it is the class of beta2^alpha1).
        RingElem out(source_ring);
        static const std::map<std::string, std::string> swap = {
            {"1", "1"}, {"alpha1", "alpha2"}, {"alpha2", "alpha1"},
            {"beta1", "beta2"}, {"beta2", "beta1"}, {"gamma", "gamma"}};
        for (const auto& [i, c] : x.coeffs()) {
            const std::string& nm = target_ring->basis()[static_cast<std::size_t>(i)].name;
            out.add_coeff(source_ring->basis_index(swap.at(nm)), c);
        }
        return out;
    }
    if (f.target.kind == GroupId::Kind::FreeAbelian) {
        // multiplicative extension over the exterior basis of the target
        const int d = f.target.rank;
        RingElem out(source_ring);
        for (const auto& [mask, c] : x.coeffs()) {
            RingElem term = source_ring->unit();
            for (int j = 0; j < d; ++j)
                if (mask & (1 << j)) term = term * h1_pullback_coordinate(f, j, source_ring);
            for (const auto& [k, ck] : term.coeffs()) out.add_coeff(k, c * ck);
        }
        return out;
    }
    throw bad_input("pullback_class: unsupported hom shape for symbolic pullback");
}

RingElem ch_of_expr(const reps::RepExpr& e, const RingPtr& ring) {
    if (ring->group() != e.group)
        throw bad_input("ch_of_expr: expression group does not match the ring");
    using K = reps::RepExpr::Kind;
    switch (e.kind) {
        case K::Trivial:
            return ring->from_rational(e.n);
        case K::Voiculescu: {
            // scalar cocycle class: c1 = [omega] = -e1^e2 under the fixed
            // orientation; ch = n exp(c1 / n)
            RingElem c1 = -(ring->basis_elem("e1") * ring->basis_elem("e2"));
            return exp_deg2(c1 * (Rat(1) / e.n)) * Rat(e.n);
        }
        case K::ESSRho: {
            RingElem c1 = ring->basis_elem("beta1");
            return exp_deg2(c1 * (Rat(1) / e.n)) * Rat(e.n);
        }
        case K::ESSRhoTilde: {
            RingElem c1 = ring->basis_elem("beta2");
            return exp_deg2(c1 * (Rat(1) / e.n)) * Rat(e.n);
        }
        case K::Sum: {
            RingElem acc = ring->zero();
            for (const auto& c : e.children) acc = acc + ch_of_expr(c, ring);
            return acc;
        }
        case K::Tensor: {
            RingElem acc = ring->unit();
            for (const auto& c : e.children) acc = acc * ch_of_expr(c, ring);
            return acc;
        }
        case K::Conj: {
            RingElem inner = ch_of_expr(e.children[0], ring);
            RingElem out(ring);
            for (const auto& [i, c] : inner.coeffs()) {
                int deg = ring->basis()[static_cast<std::size_t>(i)].degree;
                if (deg % 2 != 0) throw check_failure("ch has an odd-degree component");
                out.add_coeff(i, (deg / 2) % 2 == 0 ? c : -c);
            }
            return out;
        }
        case K::Amplify:
            return ch_of_expr(e.children[0], ring) * Rat(e.n);
        case K::Pullback: {
            RingElem inner = ch_of_expr(e.children[0], canonical_ring(e.children[0].group));
            RingElem pulled = pullback_class(*e.hom, inner);
            if (pulled.ring() != ring)
                throw bad_input("ch_of_expr: pullback landed in a non-canonical ring");
            return pulled;
        }
    }
    throw bad_input("ch_of_expr: unknown expression kind");
}

std::vector<RingElem> chern_from_ch(const RingElem& ch) {
    RingPtr ring = ch.ring();
    Rat rank = ch.coeff(ring->unit_index());
    if (rank <= 0 || denominator(rank) != 1) throw bad_input("chern_from_ch: rank must be a positive integer");
    const int kmax = ring->top_degree() / 2;
    // p_k = k! ch_k  (power sums of the Chern roots)
    std::vector<RingElem> p(static_cast<std::size_t>(kmax) + 1, ring->zero());
    Rat fact = 1;
    for (int k = 1; k <= kmax; ++k) {
        fact *= k;
        p[static_cast<std::size_t>(k)] = ch.degree_part(2 * k) * fact;
    }
    // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    std::vector<RingElem> e(static_cast<std::size_t>(kmax) + 1, ring->zero());
    e[0] = ring->unit();
    for (int k = 1; k <= kmax; ++k) {
        RingElem acc = ring->zero();
        Rat sign = 1;
        for (int i = 1; i <= k; ++i) {
            acc = acc + e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)] * sign;
            sign = -sign;
        }
        e[static_cast<std::size_t>(k)] = acc * (Rat(1) / k);
    }
    return std::vector<RingElem>(e.begin() + 1, e.end());
}

RingElem chern_to_ch(const Rat& rank, const std::vector<RingElem>& chern) {
    if (chern.empty()) throw bad_input("chern_to_ch: needs at least c1");
    RingPtr ring = chern[0].ring();
    const int kmax = static_cast<int>(chern.size());
    std::vector<RingElem> e(static_cast<std::size_t>(kmax) + 1, ring->zero());
    e[0] = ring->unit();
    for (int k = 1; k <= kmax; ++k) e[static_cast<std::size_t>(k)] = chern[static_cast<std::size_t>(k - 1)];
    std::vector<RingElem> p(static_cast<std::size_t>(kmax) + 1, ring->zero());
    for (int k = 1; k <= kmax; ++k) {
        // p_k = sum_{i=1..k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        RingElem acc = ring->zero();
        Rat sign = 1;
        for (int i = 1; i < k; ++i) {
            acc = acc + e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)] * sign;
            sign = -sign;
        }
        acc = acc + e[static_cast<std::size_t>(k)] * (sign * k);
        p[static_cast<std::size_t>(k)] = acc;
    }
    RingElem ch = ring->from_rational(rank);
    Rat fact = 1;
    for (int k = 1; k <= kmax; ++k) {
        fact *= k;
        ch = ch + p[static_cast<std::size_t>(k)] * (Rat(1) / fact);
    }
    return ch;
}

namespace {

// Voiculescu block pulled back so that its ch is n + e_i e_j: the pullback
// sends the shift generator to coordinate j and the diagonal one to i.
reps::RepExpr voic_pair(int i, int j, int n, int d) {
    std::vector<std::vector<std::int64_t>> m(2, std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
    m[0][static_cast<std::size_t>(j - 1)] = 1;
    m[1][static_cast<std::size_t>(i - 1)] = 1;
    GroupHom f = groups::hom_abelian_matrix(groups::free_abelian(d), groups::free_abelian(2), std::move(m));
    return reps::pullback(f, reps::voiculescu(n));
}

reps::RepExpr plan_ordered(std::vector<std::pair<int, int>> pairs, int d, int n) {
    GroupId zd = groups::free_abelian(d);
    if (pairs.empty()) return reps::trivial(1, zd);
    if (pairs.size() == 1) {
        auto [i, j] = pairs[0];
        return reps::sum({voic_pair(i, j, n, d), reps::trivial(2 * n, zd)});
    }
    auto [l, m] = pairs.back();
    std::vector<std::pair<int, int>> rest(pairs.begin(), pairs.end() - 1);
    std::vector<std::pair<int, int>> rest_swapped = rest;
    std::swap(rest_swapped[0].first, rest_swapped[0].second);
    std::int64_t pow3n = 1;
    for (std::size_t k = 0; k < rest.size(); ++k) pow3n *= 3 * n;
    return reps::sum({
        reps::tensor({voic_pair(l, m, n, d), plan_ordered(rest, d, n)}),
        reps::amplify(n, plan_ordered(rest_swapped, d, n)),
        reps::amplify(static_cast<int>(pow3n), voic_pair(m, l, n, d)),
    });
}

} // namespace

reps::RepExpr plan_zd_monomial(const std::vector<std::pair<int, int>>& pairs, int d, int n) {
    if (n < 1) throw bad_input("plan_zd_monomial: n >= 1 required");
    std::vector<bool> used(static_cast<std::size_t>(d) + 1, false);
    for (const auto& [i, j] : pairs) {
        if (i < 1 || i > d || j < 1 || j > d || i == j)
            throw bad_input("plan_zd_monomial: pair indices must be distinct and within 1..d");
        if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)])
            throw bad_input("plan_zd_monomial: pairs must be disjoint");
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
    }
    return plan_ordered(pairs, d, n);
}

} // namespace ar::cohring
