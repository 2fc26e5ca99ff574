#pragma once

#include "syzint/reduction.hpp"

namespace syzint {

/// Variables an expression actually involves: explicit occurrences in the
/// coefficients plus the dependencies of every function mentioned.
VarSet expression_vars(const Registry& reg, const FuncExpr& e);

/// Overlap count of Eq-style multi-variable integration: sum over pairs of
/// distinct derivative variables of the product of their orders. The overlap
/// functions live on n-2 variables.
long redundancy_estimate(const MultiIndex& j);

struct MonomialIntegrateResult {
    FuncId solved;
    FuncExpr rhs;
    std::vector<FuncId> introduced;
    long overlap_estimate = 0;
    int overlap_nvars = 0;
};

/// Integrate a single-term pure derivative 0 = f_J to a substitution
/// f = sum_i sum_{j<J(i)} g_{ij} (x^i)^j and apply it system-wide.
MonomialIntegrateResult monomial_integrate(System& sys, LabelId eq);

struct RenameRecord {
    FuncId renamed;      ///< the function that blocked integration
    FuncId fresh;        ///< its replacement d
    FuncExpr defining;   ///< 0 = defining (d_v - old term or d_v - c)
    bool whole_term = false;
};

struct ExactIntegrateResult {
    LabelId eq;
    FuncId introduced;
    std::vector<RenameRecord> renames;
};

/// Integrate an equation once with respect to v; v-dependent non-principal
/// functions are renamed through c = d_v (or a whole blocking term is named)
/// first. The integrated equation replaces the original.
ExactIntegrateResult exact_integrate_wrt(System& sys, LabelId eq, VarId v);

/// True when every term of the equation peels in v, renaming admissible
/// (non-principal) functions where needed.
bool can_integrate_wrt(const System& sys, LabelId eq, VarId v);

/// Split an equation by powers of a variable that occurs only explicitly.
std::vector<LabelId> direct_separate(System& sys, LabelId eq, VarId v);

/// Archive eq as the definition of f (which must occur algebraically and
/// linearly with constant coefficient and depend on all equation variables)
/// and eliminate f from the system.
void substitute_function(System& sys, LabelId eq, FuncId f);

/// Restricted indirect separation: differentiate by a variable that kills
/// every function not depending on it, separate the result, back-integrate
/// each piece, and reduce the original by the integrated equations. Handles
/// the class of equations with no function of all equation variables whose
/// coefficients are free of the differentiation variable.
bool ise_lite(System& sys, const Ranking& rk, LabelId eq);

} // namespace syzint
