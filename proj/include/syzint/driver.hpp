#pragma once

#include "syzint/conventional.hpp"
#include "syzint/integrator.hpp"
#include "syzint/io.hpp"

namespace syzint {

enum class Action {
    separate,
    substitute,
    single_integrate,
    eliminate,
    delete_redundant,
    syzygy_integrate,
    conventional_integrate,
    reduce_pair,
    any_integrate,
};

struct Strategy {
    std::vector<Action> actions;

    /// "syzygy", "conventional", or a comma-separated action list.
    static Strategy parse(const std::string& spec);
    static Strategy syzygy_first();
    static Strategy conventional_only();
};

struct SolveOptions {
    std::string ranking = "total"; ///< "total" or "lex"
    Strategy strategy = Strategy::syzygy_first();
    int max_steps = 1000;
    int max_divergence_subset = 0; ///< 0 = all variables
    bool check_invariants = true;
};

struct SolveResult {
    int exit_code = 0; ///< 0 solved, 2 incomplete
    std::string status;
    int steps = 0;
    std::string report_json; ///< full machine-readable report
    std::vector<std::string> trace;
};

SolveResult solve(const SystemFile& file, const SolveOptions& options);

/// Options recorded in the file, overridable per call.
SolveOptions options_from_file(const SystemFile& file);

} // namespace syzint
