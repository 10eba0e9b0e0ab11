#include "almostrep/groups.hpp"

#include <algorithm>

namespace ar::groups {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw check_failure("integer overflow in group arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw check_failure("integer overflow in group arithmetic");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    std::int64_t r;
    if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw check_failure("integer overflow in group arithmetic");
    return r;
}

// H3 product on a coordinate triple: (xy)_3 = x3 + y3 + x2*y1.
void h3_mul(const std::int64_t* x, const std::int64_t* y, std::int64_t* out) {
    out[0] = checked_add(x[0], y[0]);
    out[1] = checked_add(x[1], y[1]);
    out[2] = checked_add(checked_add(x[2], y[2]), checked_mul(x[1], y[0]));
}

template <typename Fn>
void for_each_factor(const GroupId& g, Fn&& fn) {
    if (g.kind == GroupId::Kind::Product) {
        int off = 0;
        for (const auto& f : g.factors) {
            fn(f, off);
            off += f.coord_size();
        }
    } else {
        fn(g, 0);
    }
}

} // namespace

bool GroupId::operator==(const GroupId& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::FreeAbelian: return rank == o.rank;
        case Kind::Heisenberg: return true;
        case Kind::Product: return factors == o.factors;
    }
    return false;
}

int GroupId::coord_size() const {
    switch (kind) {
        case Kind::FreeAbelian: return rank;
        case Kind::Heisenberg: return 3;
        case Kind::Product: {
            int n = 0;
            for (const auto& f : factors) n += f.coord_size();
            return n;
        }
    }
    return 0;
}

std::string GroupId::describe() const {
    switch (kind) {
        case Kind::FreeAbelian: return "Z^" + std::to_string(rank);
        case Kind::Heisenberg: return "H3";
        case Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) s += " x ";
                s += factors[i].describe();
            }
            return s;
        }
    }
    return "?";
}

GroupId free_abelian(int d) {
    if (d < 1) throw bad_input("free_abelian: rank must be positive");
    GroupId g;
    g.kind = GroupId::Kind::FreeAbelian;
    g.rank = d;
    return g;
}

GroupId heisenberg() {
    GroupId g;
    g.kind = GroupId::Kind::Heisenberg;
    return g;
}

GroupId product(const std::vector<GroupId>& factors) {
    std::vector<GroupId> flat;
    for (const auto& f : factors) {
        if (f.kind == GroupId::Kind::Product)
            flat.insert(flat.end(), f.factors.begin(), f.factors.end());
        else
            flat.push_back(f);
    }
    if (flat.size() < 2) throw bad_input("product: needs at least two factors");
    GroupId g;
    g.kind = GroupId::Kind::Product;
    g.factors = std::move(flat);
    return g;
}

bool GroupElement::is_identity() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

GroupElement identity(const GroupId& g) {
    return GroupElement{g, std::vector<std::int64_t>(static_cast<std::size_t>(g.coord_size()), 0)};
}

GroupElement element(const GroupId& g, std::vector<std::int64_t> coords) {
    if (static_cast<int>(coords.size()) != g.coord_size())
        throw bad_input("element: coordinate shape does not match group " + g.describe());
    return GroupElement{g, std::move(coords)};
}

void mul_into(const GroupId& g, const std::int64_t* a, const std::int64_t* b, std::int64_t* out) {
    for_each_factor(g, [&](const GroupId& f, int off) {
        if (f.kind == GroupId::Kind::Heisenberg) {
            h3_mul(a + off, b + off, out + off);
        } else {
            for (int i = 0; i < f.rank; ++i) out[off + i] = checked_add(a[off + i], b[off + i]);
        }
    });
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
    if (g.group != h.group) throw bad_input("mul: group mismatch");
    GroupElement out = identity(g.group);
    mul_into(g.group, g.coords.data(), h.coords.data(), out.coords.data());
    return out;
}

GroupElement inv(const GroupElement& g) {
    GroupElement out = identity(g.group);
    for_each_factor(g.group, [&](const GroupId& f, int off) {
        if (f.kind == GroupId::Kind::Heisenberg) {
            const std::int64_t* x = g.coords.data() + off;
            out.coords[off + 0] = checked_neg(x[0]);
            out.coords[off + 1] = checked_neg(x[1]);
            out.coords[off + 2] = checked_add(checked_mul(x[0], x[1]), checked_neg(x[2]));
        } else {
            for (int i = 0; i < f.rank; ++i) out.coords[off + i] = checked_neg(g.coords[off + i]);
        }
    });
    return out;
}

GroupElement power(const GroupElement& g, std::int64_t k) {
    GroupElement base = k < 0 ? inv(g) : g;
    std::int64_t reps = k < 0 ? -k : k;
    GroupElement acc = identity(g.group);
    for (std::int64_t i = 0; i < reps; ++i) acc = mul(acc, base);
    return acc;
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
    return mul(mul(g, h), mul(inv(g), inv(h)));
}

GroupHom hom_abelian_matrix(const GroupId& source, const GroupId& target,
                            std::vector<std::vector<std::int64_t>> m) {
    if (static_cast<int>(m.size()) != target.coord_size())
        throw bad_input("hom_abelian_matrix: row count must equal target coord size");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != source.coord_size())
            throw bad_input("hom_abelian_matrix: column count must equal source coord size");
    GroupHom f;
    f.kind = GroupHom::Kind::AbelianMatrix;
    f.source = source;
    f.target = target;
    f.matrix = std::move(m);
    return f;
}

GroupHom hom_projection(const GroupId& source, int factor_index) {
    if (source.kind != GroupId::Kind::Product) throw bad_input("hom_projection: source must be a product");
    if (factor_index < 0 || factor_index >= static_cast<int>(source.factors.size()))
        throw bad_input("hom_projection: factor index out of range");
    GroupHom f;
    f.kind = GroupHom::Kind::Projection;
    f.source = source;
    f.target = source.factors[static_cast<std::size_t>(factor_index)];
    f.factor_index = factor_index;
    return f;
}

GroupHom hom_alpha1() {
    GroupHom f;
    f.kind = GroupHom::Kind::Alpha1;
    f.source = heisenberg();
    f.target = free_abelian(1);
    return f;
}

GroupHom hom_alpha2() {
    GroupHom f;
    f.kind = GroupHom::Kind::Alpha2;
    f.source = heisenberg();
    f.target = free_abelian(1);
    return f;
}

GroupHom hom_eta_auto() {
    GroupHom f;
    f.kind = GroupHom::Kind::EtaAuto;
    f.source = heisenberg();
    f.target = heisenberg();
    return f;
}

GroupHom hom_tuple(std::vector<GroupHom> parts) {
    if (parts.empty()) throw bad_input("hom_tuple: needs parts");
    for (const auto& p : parts)
        if (p.source != parts[0].source) throw bad_input("hom_tuple: common source required");
    // Adjacent free-abelian targets fuse into a single Z^d factor, so a tuple
    // of integer-valued maps lands in Z^k rather than Z x ... x Z.
    bool all_abelian = std::all_of(parts.begin(), parts.end(), [](const GroupHom& p) {
        return p.target.kind == GroupId::Kind::FreeAbelian;
    });
    GroupHom f;
    f.kind = GroupHom::Kind::Tuple;
    f.source = parts[0].source;
    if (all_abelian) {
        int total = 0;
        for (const auto& p : parts) total += p.target.rank;
        f.target = free_abelian(total);
    } else {
        std::vector<GroupId> targets;
        for (const auto& p : parts) targets.push_back(p.target);
        f.target = product(targets);
    }
    f.parts = std::move(parts);
    return f;
}

GroupHom hom_compose(std::vector<GroupHom> parts) {
    if (parts.empty()) throw bad_input("hom_compose: needs parts");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i].target != parts[i + 1].source)
            throw bad_input("hom_compose: target/source chain mismatch");
    GroupHom f;
    f.kind = GroupHom::Kind::Compose;
    f.source = parts.front().source;
    f.target = parts.back().target;
    f.parts = std::move(parts);
    return f;
}

GroupElement hom_apply(const GroupHom& f, const GroupElement& g) {
    if (g.group != f.source) throw bad_input("hom_apply: element not in the hom's source group");
    switch (f.kind) {
        case GroupHom::Kind::AbelianMatrix: {
            GroupElement out = identity(f.target);
            for (std::size_t r = 0; r < f.matrix.size(); ++r) {
                std::int64_t acc = 0;
                for (std::size_t c = 0; c < f.matrix[r].size(); ++c)
                    acc = checked_add(acc, checked_mul(f.matrix[r][c], g.coords[c]));
                out.coords[r] = acc;
            }
            return out;
        }
        case GroupHom::Kind::Projection: {
            int off = 0;
            for (int i = 0; i < f.factor_index; ++i)
                off += f.source.factors[static_cast<std::size_t>(i)].coord_size();
            int len = f.target.coord_size();
            std::vector<std::int64_t> coords(g.coords.begin() + off, g.coords.begin() + off + len);
            return GroupElement{f.target, std::move(coords)};
        }
        case GroupHom::Kind::Alpha1:
            return GroupElement{f.target, {g.coords[0]}};
        case GroupHom::Kind::Alpha2:
            return GroupElement{f.target, {g.coords[1]}};
        case GroupHom::Kind::EtaAuto: {
            std::int64_t x1 = g.coords[0], x2 = g.coords[1], x3 = g.coords[2];
            return GroupElement{f.target, {x2, x1, checked_add(checked_mul(x1, x2), checked_neg(x3))}};
        }
        case GroupHom::Kind::Tuple: {
            GroupElement out = identity(f.target);
            int off = 0;
            for (const auto& p : f.parts) {
                GroupElement v = hom_apply(p, g);
                std::copy(v.coords.begin(), v.coords.end(), out.coords.begin() + off);
                off += p.target.coord_size();
            }
            return out;
        }
        case GroupHom::Kind::Compose: {
            GroupElement v = g;
            for (const auto& p : f.parts) v = hom_apply(p, v);
            return v;
        }
    }
    throw bad_input("hom_apply: unknown hom kind");
}

std::vector<GroupElement> coordinate_box(const GroupId& g, int box, std::size_t cap) {
    const int n = g.coord_size();
    const std::size_t side = static_cast<std::size_t>(2 * box + 1);
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= side;
        if (total > cap) throw bad_input("coordinate_box: box too large for group " + g.describe());
    }
    std::vector<GroupElement> out;
    out.reserve(total);
    std::vector<std::int64_t> coords(static_cast<std::size_t>(n), -box);
    for (;;) {
        out.push_back(GroupElement{g, coords});
        int i = 0;
        while (i < n && coords[static_cast<std::size_t>(i)] == box) {
            coords[static_cast<std::size_t>(i)] = -box;
            ++i;
        }
        if (i == n) break;
        ++coords[static_cast<std::size_t>(i)];
    }
    return out;
}

bool hom_check(const GroupHom& f, int box) {
    // Deterministic subsample when the full box is too big to sweep pairwise.
    std::vector<GroupElement> pts;
    try {
        pts = coordinate_box(f.source, box, 3000);
    } catch (const bad_input&) {
        pts = coordinate_box(f.source, 1, 3000);
    }
    std::size_t stride = 1;
    while (pts.size() / stride > 400) ++stride;
    std::vector<GroupElement> sample;
    for (std::size_t i = 0; i < pts.size(); i += stride) sample.push_back(pts[i]);
    for (const auto& g : sample)
        for (const auto& h : sample) {
            if (hom_apply(f, mul(g, h)) != mul(hom_apply(f, g), hom_apply(f, h))) return false;
        }
    return true;
}

} // namespace ar::groups
