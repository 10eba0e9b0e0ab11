#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "almostrep/groups.hpp"

namespace ar::reps {

// Expression tree of almost-representation constructors. Leaves are the
// Voiculescu pair on Z^2, the two H3 families (odd n), and trivial blocks;
// nodes combine by direct sum, tensor product, conjugation, pullback along a
// group hom, and r-fold amplification.
struct RepExpr {
    enum class Kind { Voiculescu, ESSRho, ESSRhoTilde, Trivial, Sum, Tensor, Conj, Pullback, Amplify };
    Kind kind = Kind::Trivial;
    int n = 1;  // leaf parameter, Trivial size, or Amplify multiplicity
    groups::GroupId group;
    std::vector<RepExpr> children;
    std::optional<groups::GroupHom> hom;  // Pullback only
};

RepExpr voiculescu(int n);
RepExpr ess_rho(int n);
RepExpr ess_rho_tilde(int n);
RepExpr trivial(int k, const groups::GroupId& g);
RepExpr sum(std::vector<RepExpr> parts);
RepExpr tensor(std::vector<RepExpr> parts);
RepExpr conj(RepExpr e);
RepExpr pullback(const groups::GroupHom& f, RepExpr e);
RepExpr amplify(int r, RepExpr e);

std::int64_t dim(const RepExpr& e);

std::string repexpr_to_json(const RepExpr& e);
RepExpr repexpr_from_json(const std::string& text);

} // namespace ar::reps
