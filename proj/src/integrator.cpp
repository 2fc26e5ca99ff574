#include "syzint/integrator.hpp"

#include <algorithm>
#include <functional>

#include "syzint/io.hpp"

namespace syzint {

namespace {

int perm_sign(std::vector<VarId> idx)
{
    int s = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] > idx[b])
                s = -s;
    return s;
}

std::vector<std::vector<VarId>> subsets_of_size(const std::vector<VarId>& vars, std::size_t k)
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

/// A created integral equation: stored value = q_part/factor - r_part, so
/// the potential reconstructs as factor * (label + r_part).
struct CreatedEq {
    LabelId label;
    Rational factor;
};

Rational lead_factor(const Ranking& rk, const FuncExpr& e)
{
    auto [lead, coeff] = rk.leading_term(e);
    if (coeff.is_constant())
        return coeff.constant_value();
    return sgn(coeff.leading_coeff()) < 0 ? Rational(-1) : Rational(1);
}

/// Register the integral 0 = q_part/factor - r_part. Scaling by the leading
/// coefficient of the potential part keeps the fresh functions of integration
/// entering with a minus sign.
CreatedEq create_integral_equation(System& sys, const Ranking& rk, const FuncExpr& q_part,
                                   const FuncExpr& r_part, bool factor_from_q)
{
    FuncExpr value;
    Rational factor;
    if (factor_from_q && !q_part.is_zero()) {
        factor = lead_factor(rk, q_part);
        value = q_part.scaled(Rational(1) / factor) - r_part;
    } else {
        factor = lead_factor(rk, q_part - r_part);
        value = (q_part - r_part).scaled(Rational(1) / factor);
    }
    LabelId id = sys.add_basis_equation(std::move(value));
    return CreatedEq{id, factor};
}

} // namespace

std::map<VarId, FuncExpr> substitute_labels(const System& sys, const DivergenceForm& df)
{
    std::map<VarId, FuncExpr> out;
    for (const auto& [v, e] : df.comp) {
        for (LabelId l : e.symbols())
            if (sys.eq(l).status == EqStatus::deleted)
                throw std::runtime_error("reference to deleted equation " + sys.eq(l).name);
        // a label in a syzygy stands for its recorded equation, which a later
        // in-place reduction of the slot does not change
        out[v] = sys.eval_basis(e);
    }
    return out;
}

Usefulness assess_usefulness(const System& sys, const DivergenceForm& df,
                             const PotentialResult& q)
{
    if (df.vars.size() <= 2)
        return {true, "conservation law with two components"};
    const Registry& reg = sys.registry();
    std::size_t new_funcs =
        subsets_of_size(df.vars, 3).size() + q.F.size();
    std::vector<FuncId> solvable;
    for (const auto& [pair, expr] : q.Q) {
        for (const auto& [k, c] : expr.terms()) {
            if (!k.idx.empty() || !c.is_constant())
                continue;
            if (!(reg.func(k.sym).deps == reg.all_vars()))
                continue;
            if (std::find(solvable.begin(), solvable.end(), k.sym) == solvable.end())
                solvable.push_back(k.sym);
        }
    }
    bool ok = solvable.size() > new_funcs;
    std::string reason = std::to_string(solvable.size()) + " function(s) solvable vs " +
                         std::to_string(new_funcs) + " new function(s)";
    return {ok, reason};
}

std::vector<DeletionRecord> detect_redundant(System& sys, std::vector<LabelExpr>& working)
{
    std::vector<DeletionRecord> out;
    bool found = true;
    while (found) {
        found = false;
        for (std::size_t si = 0; si < working.size() && !found; ++si) {
            const LabelExpr& s = working[si];
            for (const auto& [k, c] : s.terms()) {
                if (!k.idx.empty() || !c.is_constant())
                    continue;
                if (sys.eq(k.sym).status != EqStatus::active)
                    continue;
                LabelId m = k.sym;
                // deletion is only safe while the slot still holds the
                // recorded equation the syzygy talks about
                if (!(sys.eq(m).value == sys.basis_value(m)))
                    continue;
                Rational a = c.constant_value();
                LabelExpr omega = (LabelExpr::symbol(m) - s.scaled(Rational(1) / a));
                // solution preservation: the solved form reproduces the value
                if (!(sys.eval_basis(omega) == sys.eq(m).value))
                    throw std::logic_error("redundancy candidate does not solve equation " +
                                           sys.eq(m).name);
                sys.delete_equation(m, omega, s);
                out.push_back(sys.deletions().back());
                working.erase(working.begin() + si);
                for (auto& w : working)
                    w = canonical_syzygy(substitute_symbol(sys.registry(), w, m, omega));
                std::erase_if(working, [](const LabelExpr& w) { return w.is_zero(); });
                sys.substitute_label_in_syzygies(m, omega);
                found = true;
                break;
            }
        }
    }
    return out;
}

IntegrationStepReport integrate_step(System& sys, const Ranking& rk, std::size_t syzygy_index,
                                     const DivergenceForm& df)
{
    Registry& reg = sys.registry();
    IntegrationStepReport rep;
    rep.used_syzygy = sys.syzygies().at(syzygy_index).expr;
    rep.divergence = df;

    std::map<VarId, FuncExpr> current = substitute_labels(sys, df);
    Registry::Mark mark = reg.mark();
    PotentialResult q = divint(reg, current, df.vars);

    Usefulness u = assess_usefulness(sys, df, q);
    rep.reason = u.reason;
    if (!u.useful) {
        reg.rollback(mark);
        rep.useful = false;
        return rep;
    }
    rep.useful = true;
    for (FuncId f : q.F)
        rep.new_functions.push_back(f);

    const std::vector<VarId>& vars = df.vars;
    std::map<std::pair<VarId, VarId>, CreatedEq> created;

    if (vars.size() == 2) {
        VarId i = vars[0], j = vars[1];
        VarSet complement = reg.all_vars();
        for (VarId v : vars)
            complement.remove(v);
        FuncId r = reg.fresh_function(complement, FuncOrigin::integration);
        rep.new_functions.push_back(r);
        created[{i, j}] =
            create_integral_equation(sys, rk, q.at(i, j), FuncExpr::symbol(r), true);
    } else {
        std::map<std::vector<VarId>, FuncId> r_funcs;
        for (const auto& triple : subsets_of_size(vars, 3)) {
            FuncId r = reg.fresh_function(reg.all_vars(), FuncOrigin::integration);
            r_funcs[triple] = r;
            rep.new_functions.push_back(r);
        }
        for (std::size_t a = 0; a < vars.size(); ++a) {
            for (std::size_t b = a + 1; b < vars.size(); ++b) {
                VarId i = vars[a], j = vars[b];
                FuncExpr r_part;
                for (VarId k : vars) {
                    if (k == i || k == j)
                        continue;
                    std::vector<VarId> sorted{i, j, k};
                    std::sort(sorted.begin(), sorted.end());
                    int sign = perm_sign({i, j, k});
                    r_part += FuncExpr::term(r_funcs[sorted], MultiIndex::single(k),
                                             Poly(Rational(sign)));
                }
                created[{i, j}] = create_integral_equation(sys, rk, q.at(i, j), r_part, false);
            }
        }
    }
    for (const auto& [pair, ce] : created)
        rep.new_equations.push_back(ce.label);

    // auxiliary defining equations from the potential construction; the
    // follow-up syzygies must carry them since the potentials reproduce the
    // current only modulo these equations
    std::map<VarId, std::vector<LabelId>> aux;
    for (const auto& e : q.E) {
        LabelId id = sys.add_basis_equation(e.value);
        rep.new_equations.push_back(id);
        aux[e.component].push_back(id);
    }

    // new syzygies: 0 = P^i(e_k) - sum_j D_j Q^{ij}(labels), R parts cancelling
    std::vector<LabelExpr> fresh;
    for (VarId i : vars) {
        LabelExpr s = df.comp.at(i);
        for (VarId j : vars) {
            if (j == i)
                continue;
            VarId a = std::min(i, j), b = std::max(i, j);
            const CreatedEq& ce = created.at({a, b});
            Rational f = (i < j) ? ce.factor : -ce.factor;
            s -= total_derivative(reg, LabelExpr::symbol(ce.label), j).scaled(f);
        }
        for (LabelId id : aux[i])
            s += LabelExpr::symbol(id);
        if (s.is_zero())
            continue;
        if (!sys.syzygy_holds(s))
            throw std::logic_error(
                "generated syzygy does not vanish for component " + reg.var(i).name + ": " +
                print_expr(reg, sys.eval_basis(s)) + " (|E|=" + std::to_string(q.E.size()) +
                ", |F|=" + std::to_string(q.F.size()) + ")");
        fresh.push_back(canonical_syzygy(s));
    }
    rep.new_syzygies = fresh;

    sys.remove_syzygy(syzygy_index);
    for (const auto& d : detect_redundant(sys, fresh))
        rep.deleted.push_back(d.label);
    for (auto& s : fresh)
        sys.add_syzygy(s);
    return rep;
}

IntegrationStepReport curl_integrate_step(System& sys, const Ranking& rk, const CurlForm& cf,
                                          std::vector<std::size_t> used)
{
    Registry& reg = sys.registry();
    IntegrationStepReport rep;
    std::vector<VarId> vars = cf.vars;
    std::sort(vars.begin(), vars.end());

    std::map<std::pair<VarId, VarId>, FuncExpr> current;
    for (const auto& [pair, e] : cf.comp) {
        for (LabelId l : e.symbols())
            if (sys.eq(l).status == EqStatus::deleted)
                throw std::runtime_error("reference to deleted equation " + sys.eq(l).name);
        current[pair] = sys.eval_basis(e);
    }

    Registry::Mark mark = reg.mark();
    CurlPotentialResult q = curlint(reg, current, vars);

    // usefulness: a 3-variable curl introduces a single function on the
    // complement; otherwise compare solvable functions against the new ones
    bool useful = true;
    std::string reason = "vanishing curl in three variables";
    if (vars.size() > 3) {
        std::vector<FuncId> solvable;
        for (const auto& [t, expr] : q.Q3)
            for (const auto& [k, c] : expr.terms())
                if (k.idx.empty() && c.is_constant() &&
                    reg.func(k.sym).deps == reg.all_vars() &&
                    std::find(solvable.begin(), solvable.end(), k.sym) == solvable.end())
                    solvable.push_back(k.sym);
        std::size_t new_funcs = subsets_of_size(vars, 4).size() + q.F.size();
        useful = solvable.size() > new_funcs;
        reason = std::to_string(solvable.size()) + " function(s) solvable vs " +
                 std::to_string(new_funcs) + " new function(s)";
    }
    rep.reason = reason;
    if (!useful) {
        reg.rollback(mark);
        rep.useful = false;
        return rep;
    }
    rep.useful = true;
    for (FuncId f : q.F)
        rep.new_functions.push_back(f);

    std::map<std::vector<VarId>, CreatedEq> created;
    if (vars.size() == 3) {
        VarSet complement = reg.all_vars();
        for (VarId v : vars)
            complement.remove(v);
        FuncId r = reg.fresh_function(complement, FuncOrigin::integration);
        rep.new_functions.push_back(r);
        std::vector<VarId> t = vars;
        std::sort(t.begin(), t.end());
        created[t] =
            create_integral_equation(sys, rk, q.at(t[0], t[1], t[2]), FuncExpr::symbol(r), true);
    } else {
        std::map<std::vector<VarId>, FuncId> r_funcs;
        for (const auto& quad : subsets_of_size(vars, 4)) {
            FuncId r = reg.fresh_function(reg.all_vars(), FuncOrigin::integration);
            r_funcs[quad] = r;
            rep.new_functions.push_back(r);
        }
        for (const auto& triple : subsets_of_size(vars, 3)) {
            FuncExpr r_part;
            for (VarId l : vars) {
                if (std::find(triple.begin(), triple.end(), l) != triple.end())
                    continue;
                std::vector<VarId> perm = triple;
                perm.push_back(l);
                std::vector<VarId> sorted = perm;
                std::sort(sorted.begin(), sorted.end());
                r_part += FuncExpr::term(r_funcs[sorted], MultiIndex::single(l),
                                         Poly(Rational(perm_sign(perm))));
            }
            created[triple] = create_integral_equation(
                sys, rk, q.at(triple[0], triple[1], triple[2]), r_part, false);
        }
    }
    for (const auto& [t, ce] : created)
        rep.new_equations.push_back(ce.label);
    std::map<std::pair<VarId, VarId>, std::vector<LabelId>> aux;
    for (const auto& e : q.E) {
        LabelId id = sys.add_basis_equation(e.value);
        rep.new_equations.push_back(id);
        aux[e.component].push_back(id);
    }

    // new syzygies: 0 = P^{ij}(e) - sum_k D_k Q^{ijk}(labels)
    std::vector<LabelExpr> fresh;
    for (std::size_t a = 0; a < vars.size(); ++a) {
        for (std::size_t b = a + 1; b < vars.size(); ++b) {
            VarId i = vars[a], j = vars[b];
            LabelExpr s = cf.at(i, j);
            if (s.is_zero())
                continue;
            for (VarId k : vars) {
                if (k == i || k == j)
                    continue;
                std::vector<VarId> sorted{i, j, k};
                std::sort(sorted.begin(), sorted.end());
                auto it = created.find(sorted);
                if (it == created.end())
                    continue;
                Rational f = it->second.factor * perm_sign({i, j, k});
                s -= total_derivative(reg, LabelExpr::symbol(it->second.label), k).scaled(f);
            }
            for (LabelId id : aux[{i, j}])
                s += LabelExpr::symbol(id);
            if (s.is_zero())
                continue;
            if (!sys.syzygy_holds(s))
                throw std::logic_error("generated curl syzygy does not vanish");
            fresh.push_back(canonical_syzygy(s));
        }
    }
    rep.new_syzygies = fresh;

    std::sort(used.rbegin(), used.rend());
    for (std::size_t idx : used)
        sys.remove_syzygy(idx);
    for (const auto& d : detect_redundant(sys, fresh))
        rep.deleted.push_back(d.label);
    for (auto& s : fresh)
        sys.add_syzygy(s);
    return rep;
}

} // namespace syzint
