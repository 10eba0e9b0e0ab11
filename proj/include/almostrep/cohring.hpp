#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "almostrep/common.hpp"
#include "almostrep/groups.hpp"
#include "almostrep/repexpr.hpp"

namespace ar::cohring {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

// Sparse element of a graded ring: basis index -> rational coefficient.
class RingElem {
public:
    RingElem() = default;
    explicit RingElem(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const { return ring_; }
    const std::map<int, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(int basis_index) const;

    void add_coeff(int basis_index, const Rat& c);
    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator-() const;
    RingElem operator*(const RingElem& o) const;  // ring product
    RingElem operator*(const Rat& s) const;
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    // Component in one degree; degree_part(2k) collects the 2k-graded piece.
    RingElem degree_part(int degree) const;
    bool homogeneous(int degree) const;

    std::string to_string() const;
    std::string to_json() const;  // {"basis_name": "p/q", ...}

private:
    RingPtr ring_;
    std::map<int, Rat> coeffs_;
    friend class GradedRing;
};

// Finitely presented graded-commutative ring with an explicit basis and
// product table, checked for graded commutativity and associativity on
// construction. Degree-1 basis elements may carry dual group generators,
// which is what makes pullback along maps into Z^e computable.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
public:
    struct BasisEntry {
        std::string name;
        int degree;
    };

    static RingPtr create(groups::GroupId group, std::vector<BasisEntry> basis, int unit_index,
                          std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> table,
                          int top_degree);

    const groups::GroupId& group() const { return group_; }
    const std::vector<BasisEntry>& basis() const { return basis_; }
    int unit_index() const { return unit_index_; }
    int top_degree() const { return top_degree_; }

    int basis_index(const std::string& name) const;
    RingElem basis_elem(const std::string& name) const;
    RingElem unit() const;
    RingElem zero() const;
    RingElem from_rational(const Rat& r) const;

    RingElem mul_basis(int i, int j) const;

    // Degree-1 duals: (basis index, group generator) with phi_b(g_b') = delta.
    const std::vector<std::pair<int, groups::GroupElement>>& h1_duals() const { return h1_duals_; }

    // Kunneth structure, set when the ring was built as a binary product.
    struct KunnethInfo {
        RingPtr left, right;
        std::vector<std::pair<int, int>> pair_of;        // basis index -> (left, right)
        std::map<std::pair<int, int>, int> index_of;     // (left, right) -> basis index
    };
    const KunnethInfo* kunneth_info() const { return kunneth_ ? &*kunneth_ : nullptr; }

private:
    GradedRing() = default;
    void validate() const;

    groups::GroupId group_;
    std::vector<BasisEntry> basis_;
    int unit_index_ = 0;
    int top_degree_ = 0;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> table_;
    std::vector<std::pair<int, groups::GroupElement>> h1_duals_;
    std::optional<KunnethInfo> kunneth_;

    friend RingPtr exterior_ring(int d, const std::string& prefix);
    friend RingPtr h3_ring();
    friend RingPtr kunneth(const RingPtr& r1, const RingPtr& r2);
};

// Exterior algebra of H^1(Z^d); generators named e1..ed (or "t" when d = 1).
RingPtr exterior_ring(int d, const std::string& prefix = "e");
// The H3 ring on {1, alpha1, alpha2, beta1, beta2, gamma} with the relations
// alpha1.alpha2 = 0 and beta_i.alpha_j = (1 - delta_ij) gamma.
RingPtr h3_ring();
// Graded tensor product with the sign (a(x)b)(a'(x)b') = (-1)^{|b||a'|} aa'(x)bb'.
RingPtr kunneth(const RingPtr& r1, const RingPtr& r2);
// The ring this library associates to a group (memoized).
RingPtr canonical_ring(const groups::GroupId& g);

// exp of a homogeneous degree-2 element, truncated by the top degree.
RingElem exp_deg2(const RingElem& x);

// Contravariant map f^* : ring(f.target) -> ring(f.source) applied to x.
RingElem pullback_class(const groups::GroupHom& f, const RingElem& x);

// Chern character of a representation expression in the given ring.
RingElem ch_of_expr(const reps::RepExpr& e, const RingPtr& ring);

// Newton's identities: ch -> (c_1, ..., c_{top/2}) and back.
std::vector<RingElem> chern_from_ch(const RingElem& ch);
RingElem chern_to_ch(const Rat& rank, const std::vector<RingElem>& chern);

// Realizes prod_{(i,j) in S} e_i e_j + (3n)^{|S|} as a representation
// expression with nonnegative multiplicities over Voiculescu blocks.
reps::RepExpr plan_zd_monomial(const std::vector<std::pair<int, int>>& pairs, int d, int n);

} // namespace ar::cohring
