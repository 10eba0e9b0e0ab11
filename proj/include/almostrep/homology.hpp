#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "almostrep/common.hpp"
#include "almostrep/groups.hpp"

namespace ar::homology {

using Cell = std::vector<groups::GroupElement>;  // a k-tuple [g1|g2|...|gk]

// Finite rational linear combination of bar cells of one degree.
class Chain {
public:
    Chain(groups::GroupId group, int degree) : group_(std::move(group)), degree_(degree) {}

    const groups::GroupId& group() const { return group_; }
    int degree() const { return degree_; }
    const std::map<Cell, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Cell& cell, const Rat& coeff);
    Chain& operator+=(const Chain& o);
    Chain operator+(const Chain& o) const;
    Chain operator-() const;
    Chain operator-(const Chain& o) const;
    Chain operator*(const Rat& s) const;
    bool operator==(const Chain& o) const { return group_ == o.group_ && degree_ == o.degree_ && terms_ == o.terms_; }

private:
    groups::GroupId group_;
    int degree_;
    std::map<Cell, Rat> terms_;  // normalized: no zero coefficients
};

Chain chain(const groups::GroupId& g, int degree,
            const std::vector<std::pair<Cell, Rat>>& terms);

// A k-cochain: either a closed-form function of the cell or a finite table
// with declared support. Lookups outside a table's support are errors.
// Integer-valued degree-2 closed forms may carry a machine-integer evaluator
// used by the exhaustive residual sweeps.
class Cochain {
public:
    using IntFn2 = std::function<std::int64_t(const std::int64_t* x, const std::int64_t* y)>;

    static Cochain closed_form(groups::GroupId group, int degree,
                               std::function<Rat(const Cell&)> fn);
    static Cochain closed_form_int2(groups::GroupId group, std::function<Rat(const Cell&)> fn,
                                    IntFn2 fast);
    static Cochain tabulated(groups::GroupId group, int degree, std::map<Cell, Rat> table);

    const groups::GroupId& group() const { return group_; }
    int degree() const { return degree_; }
    bool is_tabulated() const { return tabulated_; }
    const IntFn2& int_fn() const { return int_fn_; }

    Rat operator()(const Cell& cell) const;
    bool covers(const Cell& cell) const;

private:
    groups::GroupId group_;
    int degree_ = 0;
    bool tabulated_ = false;
    std::function<Rat(const Cell&)> fn_;
    IntFn2 int_fn_;
    std::map<Cell, Rat> table_;
};

// d2[a|b] = [a] - [ab] + [b];  d3[a|b|c] = [b|c] - [ab|c] + [a|bc] - [a|b]
Chain boundary2(const Chain& c);
Chain boundary3(const Chain& c);
bool is_cycle(const Chain& c);

// Hopf word: an identity-valued product of commutators prod [a_i, b_i] in the
// group, with each letter given as a word over named free generators.
struct FreeWord {
    std::vector<std::pair<std::string, std::int64_t>> syllables;  // (generator, exponent)
};
struct HopfWord {
    groups::GroupId group;
    std::vector<std::pair<FreeWord, FreeWord>> pairs;
    std::map<std::string, groups::GroupElement> eval_map;
};

groups::GroupElement eval_word(const HopfWord& w, const FreeWord& word);
// prod over i of [eval(a_i), eval(b_i)]
groups::GroupElement commutator_product(const HopfWord& w);

// Bar 2-cycle representing the Hopf class: sum over i of
//   [I_{i-1}|A_i] + [I_{i-1}A_i|B_i] - [I_{i-1}A_iB_iA_i^{-1}|A_i] - [I_i|B_i]
// with I_i the partial commutator product. Cells with identity letters are kept.
Chain hopf_to_bar(const HopfWord& w);

// <f, c> = sum of coeff * f(cell), exact.
Rat kronecker(const Cochain& f, const Chain& c);

// max |f(b,c) - f(ab,c) + f(a,bc) - f(a,b)| over the triples.
Rat cocycle_residual(const Cochain& f, const std::vector<std::array<groups::GroupElement, 3>>& triples);

// Same maximum over every triple of the coordinate box, streamed rather than
// materialized; uses the cochain's integer evaluator when it has one.
Rat cocycle_residual_box(const Cochain& f, int box);

// f + d(gamma) with gamma(a) = -f(e,a); kills the identity slots of a cocycle.
Cochain normalize_cocycle(const Cochain& f);

// The H3 fixture library: generators of H^1, H^2, H^3 and H_1, H_2, H_3
// together with the cup-product representatives gamma_{i,j}.
struct H3Fixtures {
    Cochain alpha1, alpha2;        // degree 1
    Cochain beta1, beta2;          // degree 2
    Cochain gamma, gamma11, gamma21, gamma22;  // degree 3
    Chain A1, A2;  // degree 1
    Chain B1, B2;  // degree 2
    Chain C;       // degree 3
    const Chain& chain_by_name(const std::string& name) const;
    const Cochain& cochain_by_name(const std::string& name) const;
};

const H3Fixtures& h3_fixtures();

// Serialized form: list of {"cells": [...element literals...], "coeff": "p/q"}.
std::string chain_to_json(const Chain& c);

} // namespace ar::homology
