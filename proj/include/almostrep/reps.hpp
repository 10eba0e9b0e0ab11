#pragma once

#include <string>
#include <vector>

#include "almostrep/matkit.hpp"
#include "almostrep/repexpr.hpp"

namespace ar::reps {

// Evaluate an expression at a group element; the result is unitary of size
// dim(expr). ESS phases are reduced in exact integer arithmetic mod n before
// exponentiation.
matkit::CMatrix eval(const RepExpr& expr, const groups::GroupElement& g);

struct DefectReport {
    double max_defect = 0.0;
    groups::GroupElement arg_a, arg_b;  // attaining pair
    std::vector<std::tuple<groups::GroupElement, groups::GroupElement, double>> table;
};

// max over a,b in S of ||rho(ab) - rho(a) rho(b)||.
DefectReport defect(const RepExpr& expr, const std::vector<groups::GroupElement>& S);

// For each pair, tests whether rho(a) rho(b) rho(ab)* is a scalar unitary to
// within 1e-8; the phase is reported as a real in (-1/2, 1/2] (units of 2 pi).
struct ProjectivityEntry {
    groups::GroupElement a, b;
    bool scalar = false;
    double phase = 0.0;  // arg / 2 pi when scalar
    double deviation = 0.0;  // || D - lambda I ||
};
std::vector<ProjectivityEntry> projectivity_check(
    const RepExpr& expr, const std::vector<std::pair<groups::GroupElement, groups::GroupElement>>& pairs);

std::string defect_report_csv(const DefectReport& r);

} // namespace ar::reps
