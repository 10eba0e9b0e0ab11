#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "almostrep/homology.hpp"
#include "almostrep/matkit.hpp"
#include "almostrep/reps.hpp"

namespace ar::invariants {

// Real-valued tabulated 2-cochain: the local cocycle of an almost
// representation, defined over a declared support of pairs.
class OmegaTable {
public:
    OmegaTable(groups::GroupId group) : group_(std::move(group)) {}
    const groups::GroupId& group() const { return group_; }

    void set(const groups::GroupElement& a, const groups::GroupElement& b, double v);
    bool covers(const groups::GroupElement& a, const groups::GroupElement& b) const;
    double operator()(const groups::GroupElement& a, const groups::GroupElement& b) const;
    std::size_t size() const { return table_.size(); }
    const std::map<std::pair<groups::GroupElement, groups::GroupElement>, double>& entries() const {
        return table_;
    }

private:
    groups::GroupId group_;
    std::map<std::pair<groups::GroupElement, groups::GroupElement>, double> table_;
};

// omega(a,b) = (1/2 pi i) Tr log(rho(a) rho(b) rho(ab)^{-1}); the trace is
// purely imaginary for unitary input and the spurious component must stay
// below 1e-9.
OmegaTable omega(const reps::RepExpr& expr,
                 const std::vector<std::pair<groups::GroupElement, groups::GroupElement>>& pairs,
                 const matkit::Tolerances& tol = {});

struct PairingResult {
    double raw = 0.0;
    std::optional<long long> snapped;
    double residual = 0.0;  // distance to the nearest integer
    std::string method;     // "bar", "hopf", or "winding"
    std::string to_json() const;
};

// Kronecker pairing of omega_rho against a 2-cycle, snapped to the nearest
// integer when within integer_snap. Non-cycles are rejected unless snapping
// is disabled.
PairingResult pair_bar(const reps::RepExpr& expr, const homology::Chain& cycle,
                       const matkit::Tolerances& tol = {}, bool require_cycle = true);

// (1/2 pi i) Tr log of the product of commutators of a Hopf word.
PairingResult pair_hopf(const reps::RepExpr& expr, const homology::HopfWord& word,
                        const matkit::Tolerances& tol = {});

// Winding number of t -> det((1-t) I + t M), M the commutator product.
// Adaptive bisection until every step's phase change is below pi/2.
int winding_det(const reps::RepExpr& expr, const homology::HopfWord& word,
                const matkit::Tolerances& tol = {});

// max |omega(a,b) + omega(ab,c) - omega(a,bc) - omega(b,c)| over the triples.
double cocycle_residual_numeric(const reps::RepExpr& expr,
                                const std::vector<std::array<groups::GroupElement, 3>>& triples,
                                const matkit::Tolerances& tol = {});

} // namespace ar::invariants
