#pragma once

#include <map>
#include <tuple>

#include "syzint/calculus.hpp"

namespace syzint {

/// Defining equation 0 = d_j f^beta - a*f_J of an auxiliary function, tagged
/// with the current component whose residual term it integrated; the
/// component satisfies P^i = D_j Q^{ij} only modulo these equations.
struct AuxEquation {
    FuncExpr value;
    VarId component;
};

/// Antisymmetric potentials with P^i = D_j Q^{ij}, plus the new equations E
/// and new functions F introduced when some residual term could not be
/// integrated in closed form.
struct PotentialResult {
    std::map<std::pair<VarId, VarId>, FuncExpr> Q; ///< i<j only; Q^{ji} = -Q^{ij}
    std::vector<AuxEquation> E;
    std::vector<FuncId> F;

    FuncExpr at(VarId i, VarId j) const
    {
        if (i < j) {
            auto it = Q.find({i, j});
            return it == Q.end() ? FuncExpr{} : it->second;
        }
        auto it = Q.find({j, i});
        return it == Q.end() ? FuncExpr{} : -it->second;
    }
};

struct CurlAuxEquation {
    FuncExpr value;
    std::pair<VarId, VarId> component; ///< the P^{ij} the event belongs to, i<j
};

struct CurlPotentialResult {
    std::map<std::tuple<VarId, VarId, VarId>, FuncExpr> Q3; ///< i<j<k, totally antisymmetric
    std::vector<CurlAuxEquation> E;
    std::vector<FuncId> F;

    /// Q^{ijk} for arbitrary index order, with permutation sign.
    FuncExpr at(VarId i, VarId j, VarId k) const;
};

class DivintError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The three-phase potential construction: paired transfer of derivatives of
/// functions living on all context variables, one-sided absorption for j<i,
/// then term-wise integration of the residue (introducing auxiliary functions
/// where no integration variable is free). Requires sum_i D_i P^i = 0
/// identically; rejects non-conserved input with the residual reported.
PotentialResult divint(Registry& reg, const std::map<VarId, FuncExpr>& P,
                       const std::vector<VarId>& vars);

/// Row-wise divint over an antisymmetric input P^{ij} (0 = sum_j D_j P^{ij}
/// for every i), merged under total antisymmetry.
CurlPotentialResult curlint(Registry& reg,
                            const std::map<std::pair<VarId, VarId>, FuncExpr>& P2,
                            const std::vector<VarId>& vars);

} // namespace syzint
