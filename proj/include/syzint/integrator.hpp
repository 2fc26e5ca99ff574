#pragma once

#include "syzint/potentials.hpp"
#include "syzint/reduction.hpp"

namespace syzint {

/// What one syzygy based integration step did to the system.
struct IntegrationStepReport {
    LabelExpr used_syzygy;
    DivergenceForm divergence;
    std::vector<LabelId> new_equations;
    std::vector<FuncId> new_functions;
    std::vector<LabelExpr> new_syzygies;
    std::vector<LabelId> deleted;
    bool useful = false;
    std::string reason;
};

/// Conserved current with equation labels replaced by their expressions in
/// the unknowns. Throws on a reference to a deleted equation.
std::map<VarId, FuncExpr> substitute_labels(const System& sys, const DivergenceForm& df);

struct Usefulness {
    bool useful;
    std::string reason;
};

/// Two components always pay off (one function on the complement variables);
/// with three or more, count the functions solvable algebraically from the
/// prospective integrals against the new functions the step would introduce.
Usefulness assess_usefulness(const System& sys, const DivergenceForm& df,
                             const PotentialResult& q);

/// Solve each new syzygy that carries an active label algebraically with a
/// constant coefficient, substitute the solved label into every other stored
/// syzygy, and delete the equation. Returns the deletions performed.
std::vector<DeletionRecord> detect_redundant(System& sys, std::vector<LabelExpr>& working);

/// One full syzygy based integration step for a syzygy in divergence form.
/// When the step is judged not useful, the system is left untouched.
IntegrationStepReport integrate_step(System& sys, const Ranking& rk, std::size_t syzygy_index,
                                     const DivergenceForm& df);

/// The curl analog, one index higher. `used` lists store indices of the
/// syzygies consumed by the curl form (may be empty for ad-hoc use).
IntegrationStepReport curl_integrate_step(System& sys, const Ranking& rk, const CurlForm& cf,
                                          std::vector<std::size_t> used = {});

} // namespace syzint
