#include "syzint/driver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace syzint {

namespace {

const std::map<std::string, Action>& action_names()
{
    static const std::map<std::string, Action> names = {
        {"separate", Action::separate},
        {"substitute", Action::substitute},
        {"single_integrate", Action::single_integrate},
        {"eliminate", Action::eliminate},
        {"delete_redundant", Action::delete_redundant},
        {"syzygy_integrate", Action::syzygy_integrate},
        {"conventional_integrate", Action::conventional_integrate},
        {"reduce_pair", Action::reduce_pair},
        {"any_integrate", Action::any_integrate},
    };
    return names;
}

std::vector<std::vector<VarId>> var_subsets(const std::vector<VarId>& vars, std::size_t k)
{
    std::vector<std::vector<VarId>> out;
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            std::vector<VarId> s;
            for (std::size_t p : pick)
                s.push_back(vars[p]);
            out.push_back(std::move(s));
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= vars.size(); ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

struct OverlapEntry {
    long count;
    int nvars;
};

struct Driver {
    System sys;
    Ranking rk;
    SolveOptions opt;
    std::size_t n_original_eqs;
    std::vector<FuncId> original_funcs;

    int steps = 0;
    std::vector<std::string> trace;
    std::vector<OverlapEntry> overlaps;
    std::vector<std::string> syzygies_used;
    std::set<std::string> not_useful;
    std::set<std::string> cross_done;
    std::set<std::string> any_integrate_done;

    Driver(System s, SolveOptions o, std::size_t neq, std::vector<FuncId> funcs)
        : sys(std::move(s)), rk(o.ranking == "lex" ? Ranking::lex(sys.registry())
                                                   : Ranking::total_degree(sys.registry())),
          opt(std::move(o)), n_original_eqs(neq), original_funcs(std::move(funcs))
    {
    }

    void log(const std::string& line) { trace.push_back(std::to_string(steps) + " " + line); }

    void check_equation(LabelId id)
    {
        if (opt.check_invariants && !sys.history_consistent(id))
            throw std::logic_error("history invariant violated for " + sys.eq(id).name);
    }

    /// Active equations that became 0 = 0 are dropped.
    void sweep()
    {
        for (LabelId id : sys.active())
            if (sys.eq(id).value.is_zero())
                retire_zero(id, sys.eq(id).history);
    }

    /// Retire an equation whose value vanished. The history is a syzygy;
    /// when it solves the label algebraically the deletion is recorded so
    /// later identities can be rewritten over the living labels.
    void retire_zero(LabelId id, LabelExpr hist)
    {
        if (hist == LabelExpr::symbol(id)) {
            // the recorded equation itself is trivial: references resolve to 0
            sys.delete_equation(id, LabelExpr{}, std::move(hist));
            sys.substitute_label_in_syzygies(id, LabelExpr{});
            return;
        }
        auto live = hist.is_zero() ? std::optional<LabelExpr>{}
                                   : sys.normalize_against_deletions(hist);
        if (live && !live->is_zero()) {
            const Poly* c = live->find(id, MultiIndex{});
            if (c && c->is_constant()) {
                LabelExpr omega =
                    LabelExpr::symbol(id) - live->scaled(Rational(1) / c->constant_value());
                sys.delete_equation(id, omega, *live);
                sys.substitute_label_in_syzygies(id, omega);
                return;
            }
            sys.add_syzygy(*live);
        }
        sys.eq(id).status = EqStatus::deleted;
        sys.drop_syzygies_mentioning(id);
    }

    bool run_action(Action a)
    {
        switch (a) {
        case Action::separate: return try_separate();
        case Action::substitute: return try_substitute();
        case Action::single_integrate: return try_single_integrate();
        case Action::eliminate: return try_eliminate();
        case Action::delete_redundant: return try_delete_redundant();
        case Action::syzygy_integrate: return try_syzygy_integrate();
        case Action::conventional_integrate: return try_conventional_integrate();
        case Action::reduce_pair: return try_reduce_pair();
        case Action::any_integrate: return try_any_integrate();
        }
        return false;
    }

    bool step()
    {
        for (Action a : opt.strategy.actions) {
            if (run_action(a)) {
                ++steps;
                sweep();
                return true;
            }
        }
        return false;
    }

    std::string run()
    {
        sweep();
        while (!sys.active().empty()) {
            if (steps >= opt.max_steps) {
                log("step limit reached");
                return "incomplete";
            }
            if (!step())
                break;
        }
        return sys.active().empty() ? "solved" : "incomplete";
    }

    // ----------------------------------------------------- actions

    bool try_separate()
    {
        for (LabelId id : sys.active()) {
            const FuncExpr& v = sys.eq(id).value;
            VarSet eqvars = expression_vars(sys.registry(), v);
            for (VarId var : eqvars.to_vector()) {
                bool in_function = false, explicit_power = false;
                for (const auto& [k, c] : v.terms()) {
                    if (sys.registry().func(k.sym).deps.contains(var))
                        in_function = true;
                    if (!c.free_of(var))
                        explicit_power = true;
                }
                if (in_function || !explicit_power)
                    continue;
                auto parts = direct_separate(sys, id, var);
                std::string names;
                for (LabelId p : parts)
                    names += " " + sys.eq(p).name;
                log("separate " + sys.eq(id).name + " by " + sys.registry().var(var).name +
                    " ->" + names);
                return true;
            }
        }
        return false;
    }

    /// Short-equation substitution: f algebraic with at most two other
    /// terms, all of whose functions depend on fewer variables than f.
    bool try_substitute()
    {
        const Registry& reg = sys.registry();
        for (LabelId id : sys.active()) {
            const FuncExpr& v = sys.eq(id).value;
            for (const auto& [k, c] : v.terms()) {
                if (!k.idx.empty() || !c.is_constant())
                    continue;
                FuncId f = k.sym;
                bool ok = true;
                int others = 0;
                for (const auto& [k2, c2] : v.terms()) {
                    if (k2.sym == f) {
                        if (!k2.idx.empty())
                            ok = false;
                        continue;
                    }
                    ++others;
                    if (reg.func(k2.sym).deps.count() >= reg.func(f).deps.count())
                        ok = false;
                }
                if (!ok || others > 2)
                    continue;
                std::string name = reg.func(f).name;
                substitute_function(sys, id, f);
                log("substitute " + name + " from " + sys.eq(id).name);
                return true;
            }
        }
        return false;
    }

    bool try_single_integrate()
    {
        for (LabelId id : sys.active()) {
            const FuncExpr& v = sys.eq(id).value;
            if (v.terms().size() != 1)
                continue;
            const auto& [k, c] = *v.terms().begin();
            if (!c.is_constant() || k.idx.empty() || k.idx.entries().size() != 1)
                continue;
            std::string name = sys.eq(id).name;
            auto res = monomial_integrate(sys, id);
            log("single_integrate " + name + " solving " +
                sys.registry().func(res.solved).name);
            return true;
        }
        return false;
    }

    bool try_eliminate()
    {
        const Registry& reg = sys.registry();
        for (LabelId id : sys.active()) {
            const FuncExpr& v = sys.eq(id).value;
            VarSet eqvars = expression_vars(reg, v);
            for (const auto& [k, c] : v.terms()) {
                if (!k.idx.empty() || !c.is_constant())
                    continue;
                if (!eqvars.subset_of(reg.func(k.sym).deps))
                    continue;
                bool algebraic = true;
                for (const auto& [k2, c2] : v.terms())
                    if (k2.sym == k.sym && !k2.idx.empty())
                        algebraic = false;
                if (!algebraic)
                    continue;
                std::string name = reg.func(k.sym).name;
                substitute_function(sys, id, k.sym);
                log("eliminate " + name + " via " + sys.eq(id).name);
                return true;
            }
        }
        return false;
    }

    bool try_delete_redundant()
    {
        for (std::size_t si = 0; si < sys.syzygies().size(); ++si) {
            const LabelExpr s = sys.syzygies()[si].expr;
            for (const auto& [k, c] : s.terms()) {
                if (!k.idx.empty() || !c.is_constant())
                    continue;
                if (sys.eq(k.sym).status != EqStatus::active)
                    continue;
                LabelId m = k.sym;
                if (!(sys.eq(m).value == sys.basis_value(m)))
                    continue;
                LabelExpr omega =
                    LabelExpr::symbol(m) - s.scaled(Rational(1) / c.constant_value());
                if (!(sys.eval_basis(omega) == sys.eq(m).value))
                    continue;
                sys.delete_equation(m, omega, s);
                sys.remove_syzygy(si);
                sys.substitute_label_in_syzygies(m, omega);
                log("delete_redundant " + sys.eq(m).name);
                return true;
            }
        }
        return false;
    }

    bool try_syzygy_integrate()
    {
        const Registry& reg = sys.registry();
        std::size_t max_k = reg.num_variables();
        if (opt.max_divergence_subset > 0)
            max_k = std::min<std::size_t>(max_k, opt.max_divergence_subset);
        for (std::size_t k = 2; k <= max_k; ++k) {
            for (std::size_t si = 0; si < sys.syzygies().size(); ++si) {
                const LabelExpr& s = sys.syzygies()[si].expr;
                std::string key = print_label_expr(sys, s);
                if (not_useful.count(key))
                    continue;
                // only variables actually differentiated can carry a component
                VarSet dvars;
                for (const auto& [t, c] : s.terms())
                    dvars = dvars.united(t.idx.vars());
                std::vector<VarId> candidates = dvars.to_vector();
                if (candidates.size() < k)
                    continue;
                for (const auto& subset : var_subsets(candidates, k)) {
                    auto df = divergence_decompose(reg, s, subset);
                    if (!df)
                        continue;
                    auto rep = integrate_step(sys, rk, si, *df);
                    if (!rep.useful) {
                        not_useful.insert(key);
                        log("syzygy_integrate skipped (" + rep.reason + "): " + key);
                        break;
                    }
                    syzygies_used.push_back(key);
                    std::string names;
                    for (LabelId e : rep.new_equations)
                        names += " " + sys.eq(e).name;
                    log("syzygy_integrate " + key + " over " + subset_names(subset) + " ->" +
                        names + deleted_names(rep.deleted));
                    if (opt.check_invariants)
                        for (LabelId e : rep.new_equations)
                            check_equation(e);
                    return true;
                }
            }
        }
        return false;
    }

    std::string subset_names(const std::vector<VarId>& vs)
    {
        std::string out = "{";
        for (VarId v : vs)
            out += sys.registry().var(v).name;
        return out + "}";
    }

    std::string deleted_names(const std::vector<LabelId>& ds)
    {
        std::string out;
        for (LabelId d : ds)
            out += " deleting " + sys.eq(d).name;
        return out;
    }

    bool try_conventional_integrate()
    {
        const Registry& reg = sys.registry();
        for (LabelId id : sys.active()) {
            const FuncExpr v = sys.eq(id).value;
            // fully integrable single-term pure derivative
            if (v.terms().size() == 1) {
                const auto& [k, c] = *v.terms().begin();
                if (c.is_constant() && !k.idx.empty()) {
                    std::string name = sys.eq(id).name;
                    auto res = monomial_integrate(sys, id);
                    if (res.overlap_estimate > 0)
                        overlaps.push_back(OverlapEntry{res.overlap_estimate, res.overlap_nvars});
                    log("conventional_integrate " + name + " solving " +
                        reg.func(res.solved).name);
                    return true;
                }
            }
            // integrable with respect to exactly one variable
            VarSet eqvars = expression_vars(reg, v);
            std::vector<VarId> integrable;
            for (VarId var : eqvars.to_vector())
                if (can_integrate_wrt(sys, id, var))
                    integrable.push_back(var);
            if (integrable.size() == 1) {
                VarId var = integrable.front();
                std::string name = sys.eq(id).name;
                for (int round = 0; round < 20; ++round) {
                    exact_integrate_wrt(sys, id, var);
                    if (auto f = substitutable_function(id)) {
                        substitute_function(sys, id, *f);
                        log("conventional_integrate " + name + " in " + reg.var(var).name +
                            " solving " + reg.func(*f).name);
                        return true;
                    }
                    if (!can_integrate_wrt(sys, id, var))
                        break;
                }
                log("conventional_integrate " + name + " in " + reg.var(var).name);
                return true;
            }
            if (ise_lite(sys, rk, id)) {
                log("indirect_separate " + sys.eq(id).name);
                return true;
            }
        }
        return false;
    }

    std::optional<FuncId> substitutable_function(LabelId id)
    {
        const Registry& reg = sys.registry();
        const FuncExpr& v = sys.eq(id).value;
        VarSet eqvars = expression_vars(reg, v);
        for (const auto& [k, c] : v.terms()) {
            if (!k.idx.empty() || !c.is_constant())
                continue;
            if (!eqvars.subset_of(reg.func(k.sym).deps))
                continue;
            bool algebraic = true;
            for (const auto& [k2, c2] : v.terms())
                if (k2.sym == k.sym && !k2.idx.empty())
                    algebraic = false;
            if (algebraic)
                return k.sym;
        }
        return std::nullopt;
    }

    bool try_reduce_pair()
    {
        const Registry& reg = sys.registry();
        std::vector<LabelId> act = sys.active();
        // reductions first
        for (LabelId a : act) {
            for (LabelId b : act) {
                if (a == b)
                    continue;
                const Equation& eb = sys.eq(b);
                auto [lb, cb] = leading_derivative(eb, rk);
                if (!cb.is_constant())
                    continue;
                if (!find_reducible_term(sys.eq(a), eb, rk))
                    continue;
                EqCandidate cand = reduce(reg, sys.eq(a), eb, rk);
                apply_rewrite(a, std::move(cand), "reduce " + sys.eq(a).name + " by " + eb.name);
                return true;
            }
        }
        // otherwise one cross-differentiation
        for (std::size_t i = 0; i < act.size(); ++i) {
            for (std::size_t j = i + 1; j < act.size(); ++j) {
                const Equation& e1 = sys.eq(act[i]);
                const Equation& e2 = sys.eq(act[j]);
                auto [l1, c1] = leading_derivative(e1, rk);
                auto [l2, c2] = leading_derivative(e2, rk);
                if (l1.sym != l2.sym)
                    continue;
                // comparable leads belong to reduction unless the would-be
                // reducer has a non-constant coefficient
                if (l1.idx.contains(l2.idx) && c2.is_constant())
                    continue;
                if (l2.idx.contains(l1.idx) && c1.is_constant())
                    continue;
                std::string key = e1.name + "|" + e2.name + "|" +
                                  print_multiindex(reg, MultiIndex::lcm(l1.idx, l2.idx));
                if (cross_done.count(key))
                    continue;
                cross_done.insert(key);
                const Equation& low = rk.cmp_term(l1, l2) < 0 ? e1 : e2;
                const Equation& high = rk.cmp_term(l1, l2) < 0 ? e2 : e1;
                std::string low_name = low.name, high_name = high.name;
                EqCandidate cand = cross_differentiate(reg, low, high, rk);
                if (cand.value.is_zero()) {
                    if (!cand.history.is_zero() && sys.add_syzygy(cand.history)) {
                        log("cross " + low_name + " with " + high_name + " -> syzygy");
                        return true;
                    }
                    continue;
                }
                cand = monic_candidate(rk, std::move(cand));
                LabelId nid = sys.add_derived_equation(std::move(cand.value),
                                                       std::move(cand.history));
                check_equation(nid);
                log("cross " + low_name + " with " + high_name + " -> " + sys.eq(nid).name);
                return true;
            }
        }
        return false;
    }

    void apply_rewrite(LabelId a, EqCandidate cand, const std::string& what)
    {
        if (opt.check_invariants && !(sys.eval_basis(cand.history) == cand.value))
            throw std::logic_error("history invariant violated in " + what);
        if (cand.value.is_zero()) {
            Equation& e = sys.eq(a);
            if (!cand.history.is_zero()) {
                bool fresh = sys.add_syzygy(cand.history);
                log(what + " -> " + (fresh ? "syzygy" : "known syzygy"));
                if (fresh && opt.check_invariants &&
                    !sys.syzygy_holds(cand.history))
                    throw std::logic_error("harvested syzygy does not vanish");
            } else {
                log(what + " -> 0");
            }
            e.status = EqStatus::deleted;
            sys.drop_syzygies_mentioning(a);
            return;
        }
        cand = monic_candidate(rk, std::move(cand));
        sys.update_reduced(a, std::move(cand.value), std::move(cand.history));
        check_equation(a);
        log(what);
    }

    bool try_any_integrate()
    {
        const Registry& reg = sys.registry();
        for (LabelId id : sys.active()) {
            const FuncExpr& v = sys.eq(id).value;
            VarSet eqvars = expression_vars(reg, v);
            for (VarId var : eqvars.to_vector()) {
                auto [s, r] = peel_derivative(reg, v, var);
                if (!r.is_zero() || s.is_zero())
                    continue; // only clean integrals, no renaming cascade
                std::string key = sys.eq(id).name + "#" + print_expr(reg, v);
                if (any_integrate_done.count(key))
                    continue;
                any_integrate_done.insert(key);
                exact_integrate_wrt(sys, id, var);
                log("any_integrate " + sys.eq(id).name + " in " + reg.var(var).name);
                return true;
            }
        }
        return false;
    }

    // ----------------------------------------------------- reporting

    /// Residual of a substituted original equation must vanish modulo the
    /// remaining system.
    bool residual_vanishes(FuncExpr residual, const std::vector<LabelId>& remaining)
    {
        for (int iter = 0; iter < 100 && !residual.is_zero(); ++iter) {
            bool matched = false;
            for (LabelId rid : remaining) {
                const FuncExpr& rv = sys.eq(rid).value;
                for (const auto& [rt, rc] : rv.terms()) {
                    if (!rc.is_constant())
                        continue;
                    for (const auto& [t, c] : residual.terms()) {
                        if (t.sym != rt.sym || !t.idx.contains(rt.idx))
                            continue;
                        MultiIndex theta = t.idx.minus(rt.idx);
                        Poly factor = c * Poly(Rational(1) / rc.constant_value());
                        residual -= derive_multi(sys.registry(), rv, theta).scaled(factor);
                        matched = true;
                        break;
                    }
                    if (matched)
                        break;
                }
                if (matched)
                    break;
            }
            if (!matched)
                return false;
        }
        return residual.is_zero();
    }

    void verify_solution()
    {
        const Registry& reg = sys.registry();
        std::vector<LabelId> remaining = sys.active();
        for (std::size_t i = 0; i < n_original_eqs; ++i) {
            FuncExpr residual = sys.resolve(sys.eval_basis(LabelExpr::symbol(LabelId{
                std::uint32_t(i)})));
            // an original unknown still present means this equation is not
            // claimed solved yet
            bool pending = false;
            for (FuncId g : residual.symbols())
                if (reg.func(g).origin == FuncOrigin::original)
                    pending = true;
            if (pending)
                continue;
            if (!residual_vanishes(std::move(residual), remaining))
                throw std::logic_error("solution does not satisfy original equation e" +
                                       std::to_string(i + 1));
        }
    }

    std::vector<std::pair<std::string, std::string>> absorbable_pairs()
    {
        const Registry& reg = sys.registry();
        std::vector<std::pair<std::string, std::string>> out;
        std::set<std::uint32_t> defined;
        for (const auto& d : sys.definitions())
            defined.insert(d.sym.value);
        for (FuncId f : original_funcs) {
            if (!defined.count(f.value))
                continue;
            FuncExpr sol = sys.resolve(FuncExpr::symbol(f));
            // bare free functions that can host others
            std::vector<FuncId> hosts;
            for (const auto& [k, c] : sol.terms())
                if (k.idx.empty() && c.is_constant() && !defined.count(k.sym.value))
                    hosts.push_back(k.sym);
            std::vector<FuncId> frees;
            for (FuncId g : sol.symbols())
                if (!defined.count(g.value))
                    frees.push_back(g);
            for (FuncId g : frees) {
                for (FuncId h : hosts) {
                    if (g == h || !(reg.func(g).deps.count() < reg.func(h).deps.count()))
                        continue;
                    bool absorbable = true;
                    for (const auto& [k, c] : sol.terms()) {
                        if (k.sym != g)
                            continue;
                        VarSet vs = c.vars().united(reg.func(g).deps);
                        if (!vs.subset_of(reg.func(h).deps))
                            absorbable = false;
                    }
                    if (absorbable) {
                        out.emplace_back(reg.func(g).name, reg.func(h).name);
                        break;
                    }
                }
            }
        }
        return out;
    }

    std::string report(const std::string& status)
    {
        const Registry& reg = sys.registry();
        nlohmann::ordered_json j;
        j["status"] = status;
        j["steps"] = steps;

        nlohmann::ordered_json solution = nlohmann::ordered_json::array();
        std::set<std::uint32_t> defined;
        for (const auto& d : sys.definitions())
            defined.insert(d.sym.value);
        for (FuncId f : original_funcs) {
            if (!defined.count(f.value))
                continue;
            FuncExpr sol = sys.resolve(FuncExpr::symbol(f));
            nlohmann::ordered_json entry;
            entry["function"] = reg.func(f).name;
            entry["value"] = print_expr(reg, sol);
            solution.push_back(entry);
        }
        j["solution"] = solution;

        nlohmann::ordered_json remaining = nlohmann::ordered_json::array();
        for (LabelId id : sys.active())
            remaining.push_back(print_expr(reg, sys.eq(id).value));
        j["remaining"] = remaining;

        nlohmann::ordered_json funcs = nlohmann::ordered_json::array();
        for (std::uint32_t i = 0; i < reg.num_functions(); ++i) {
            const FuncSymbol& f = reg.func(FuncId{i});
            if (f.origin == FuncOrigin::original)
                continue;
            nlohmann::ordered_json entry;
            entry["name"] = f.name;
            std::string deps;
            for (VarId v : f.deps.to_vector())
                deps += (deps.empty() ? "" : ",") + reg.var(v).name;
            entry["deps"] = deps;
            entry["origin"] =
                f.origin == FuncOrigin::integration ? "integration" : "divint_auxiliary";
            funcs.push_back(entry);
        }
        j["new_functions"] = funcs;

        nlohmann::ordered_json deleted = nlohmann::ordered_json::array();
        for (std::uint32_t i = 0; i < sys.num_equations(); ++i)
            if (sys.eq(LabelId{i}).status == EqStatus::deleted)
                deleted.push_back(sys.eq(LabelId{i}).name);
        j["deleted"] = deleted;

        j["syzygies_used"] = syzygies_used;

        // stored identities that no step consumed; a human can pick these up
        nlohmann::ordered_json pending = nlohmann::ordered_json::array();
        for (const auto& syz : sys.syzygies())
            pending.push_back(print_label_expr(sys, syz.expr));
        j["syzygies_remaining"] = pending;

        nlohmann::ordered_json counters;
        counters["steps"] = steps;
        long total_overlap = 0;
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& o : overlaps) {
            total_overlap += o.count;
            entries.push_back({{"count", o.count}, {"vars", o.nvars}});
        }
        counters["redundant_overlap_total"] = total_overlap;
        counters["redundant_overlap"] = entries;
        nlohmann::ordered_json absorb = nlohmann::ordered_json::array();
        for (const auto& [g, h] : absorbable_pairs())
            absorb.push_back({g, h});
        counters["absorbable"] = absorb;
        j["counters"] = counters;
        return j.dump(2);
    }
};

} // namespace

Strategy Strategy::syzygy_first()
{
    return Strategy{{Action::separate, Action::substitute, Action::single_integrate,
                     Action::eliminate, Action::delete_redundant, Action::syzygy_integrate,
                     Action::reduce_pair, Action::conventional_integrate,
                     Action::any_integrate}};
}

Strategy Strategy::conventional_only()
{
    return Strategy{{Action::separate, Action::substitute, Action::single_integrate,
                     Action::eliminate, Action::conventional_integrate, Action::reduce_pair,
                     Action::any_integrate}};
}

Strategy Strategy::parse(const std::string& spec)
{
    if (spec == "syzygy" || spec.empty())
        return syzygy_first();
    if (spec == "conventional")
        return conventional_only();
    Strategy out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto it = action_names().find(item);
        if (it == action_names().end())
            throw std::runtime_error("unknown strategy action '" + item + "'");
        out.actions.push_back(it->second);
    }
    if (out.actions.empty())
        throw std::runtime_error("empty strategy");
    return out;
}

SolveOptions options_from_file(const SystemFile& file)
{
    SolveOptions o;
    o.ranking = file.ranking;
    o.strategy = Strategy::parse(file.strategy);
    o.max_steps = file.max_steps;
    o.max_divergence_subset = file.max_divergence_subset;
    return o;
}

SolveResult solve(const SystemFile& file, const SolveOptions& options)
{
    System sys = build_system(file);
    std::vector<FuncId> ofuncs;
    for (std::uint32_t i = 0; i < sys.registry().num_functions(); ++i)
        ofuncs.push_back(FuncId{i});
    Driver d(std::move(sys), options, file.equations.size(), std::move(ofuncs));

    SolveResult res;
    res.status = d.run();
    d.verify_solution();
    res.steps = d.steps;
    res.exit_code = res.status == "solved" ? 0 : 2;
    res.report_json = d.report(res.status);
    res.trace = std::move(d.trace);
    return res;
}

} // namespace syzint
