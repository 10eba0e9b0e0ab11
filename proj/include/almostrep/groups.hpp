#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "almostrep/common.hpp"

namespace ar::groups {

// The three group shapes used throughout: Z^d, the discrete Heisenberg group
// H3 = <a,b,c | ba=abc, ca=ac, cb=bc>, and finite direct products of these.
// Products are flattened to a single level; a factor is never itself a product.
struct GroupId {
    enum class Kind { FreeAbelian, Heisenberg, Product };
    Kind kind = Kind::FreeAbelian;
    int rank = 1;                  // FreeAbelian only
    std::vector<GroupId> factors;  // Product only, each factor non-product

    bool operator==(const GroupId& o) const;
    bool operator!=(const GroupId& o) const { return !(*this == o); }

    // Total number of integer coordinates in an element's flat coord vector.
    int coord_size() const;
    std::string describe() const;
};

GroupId free_abelian(int d);
GroupId heisenberg();
GroupId product(const std::vector<GroupId>& factors);

// Group element in normal form. Coordinates are stored flat, per factor:
// Z^d uses d entries, H3 uses (x1,x2,x3) meaning a^x1 b^x2 c^x3.
struct GroupElement {
    GroupId group;
    std::vector<std::int64_t> coords;

    bool operator==(const GroupElement& o) const { return group == o.group && coords == o.coords; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }
    bool is_identity() const;
};

GroupElement identity(const GroupId& g);
GroupElement element(const GroupId& g, std::vector<std::int64_t> coords);

GroupElement mul(const GroupElement& g, const GroupElement& h);
// Allocation-free product on raw coordinate arrays (out must not alias inputs).
void mul_into(const GroupId& g, const std::int64_t* a, const std::int64_t* b, std::int64_t* out);
GroupElement inv(const GroupElement& g);
GroupElement power(const GroupElement& g, std::int64_t k);
// [g,h] = g h g^-1 h^-1
GroupElement commutator(const GroupElement& g, const GroupElement& h);

// Group homomorphisms, restricted to the shapes the constructions need.
struct GroupHom {
    enum class Kind {
        AbelianMatrix,  // coords |-> M * coords (valid iff multiplicative; see hom_check)
        Projection,     // product source -> one factor
        Alpha1,         // H3 -> Z, x |-> x1
        Alpha2,         // H3 -> Z, x |-> x2
        EtaAuto,        // H3 -> H3, (x1,x2,x3) |-> (x2,x1,x1*x2-x3)
        Tuple,          // (f1,...,fk) with common source, target = product of targets
        Compose,        // parts applied left to right: parts[n-1] ∘ ... ∘ parts[0]
    };
    Kind kind;
    GroupId source;
    GroupId target;
    // AbelianMatrix: row-major target.coord_size() x source.coord_size()
    std::vector<std::vector<std::int64_t>> matrix;
    int factor_index = 0;  // Projection
    std::vector<GroupHom> parts;  // Tuple / Compose
};

GroupHom hom_abelian_matrix(const GroupId& source, const GroupId& target,
                            std::vector<std::vector<std::int64_t>> m);
GroupHom hom_projection(const GroupId& source, int factor_index);
GroupHom hom_alpha1();
GroupHom hom_alpha2();
GroupHom hom_eta_auto();
GroupHom hom_tuple(std::vector<GroupHom> parts);
GroupHom hom_compose(std::vector<GroupHom> parts);

GroupElement hom_apply(const GroupHom& f, const GroupElement& g);

// Verifies f(g*h) == f(g)*f(h) on a coordinate box. The sweep is exhaustive
// when the box is small and deterministically subsampled otherwise.
bool hom_check(const GroupHom& f, int box = 3);

// All elements with every coordinate in [-box, box]. Throws bad_input when
// the box would exceed `cap` elements.
std::vector<GroupElement> coordinate_box(const GroupId& g, int box, std::size_t cap = 2000000);

} // namespace ar::groups
