#include "syzint/conventional.hpp"

#include <algorithm>

namespace syzint {

VarSet expression_vars(const Registry& reg, const FuncExpr& e)
{
    VarSet s;
    for (const auto& [k, c] : e.terms()) {
        s = s.united(c.vars());
        s = s.united(reg.func(k.sym).deps);
    }
    return s;
}

long redundancy_estimate(const MultiIndex& j)
{
    const auto& es = j.entries();
    long total = 0;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
            total += long(es[a].second) * long(es[b].second);
    return total;
}

MonomialIntegrateResult monomial_integrate(System& sys, LabelId eq)
{
    Registry& reg = sys.registry();
    const Equation& e = sys.eq(eq);
    if (e.value.terms().size() != 1)
        throw std::runtime_error("monomial integration needs a single-term equation");
    const auto& [k, c] = *e.value.terms().begin();
    if (!c.is_constant())
        throw std::runtime_error("monomial integration needs a constant coefficient");
    if (k.idx.empty())
        throw std::runtime_error("equation is algebraic, nothing to integrate");

    MonomialIntegrateResult res;
    res.solved = k.sym;
    VarSet fdeps = reg.func(k.sym).deps;
    for (const auto& [v, m] : k.idx.entries()) {
        VarSet deps = fdeps;
        deps.remove(v);
        for (std::uint32_t p = 0; p < m; ++p) {
            FuncId g = reg.fresh_function(deps, FuncOrigin::integration);
            res.introduced.push_back(g);
            res.rhs += FuncExpr::term(g, MultiIndex{}, Poly::monomial(Monomial::single(v, p)));
        }
    }
    if (k.idx.entries().size() >= 2) {
        res.overlap_estimate = redundancy_estimate(k.idx);
        res.overlap_nvars = fdeps.count() - 2;
    }
    sys.archive_definition(eq, k.sym, res.rhs);
    return res;
}

namespace {

/// Remainder terms that block a v-integration, in canonical order.
std::vector<std::pair<DerivTerm<FuncId>, Poly>> blocking_terms(const Registry& reg,
                                                               const FuncExpr& value, VarId v)
{
    auto [s, r] = peel_derivative(reg, value, v);
    return {r.terms().begin(), r.terms().end()};
}

} // namespace

bool can_integrate_wrt(const System& sys, LabelId eq, VarId v)
{
    const Registry& reg = sys.registry();
    const FuncExpr& value = sys.eq(eq).value;
    VarSet eqvars = expression_vars(reg, value);
    if (!eqvars.contains(v) || value.is_zero())
        return false;
    for (const auto& [k, c] : blocking_terms(reg, value, v)) {
        // only a non-principal function may be renamed away
        if (reg.func(k.sym).deps == eqvars || eqvars.subset_of(reg.func(k.sym).deps))
            return false;
    }
    return true;
}

ExactIntegrateResult exact_integrate_wrt(System& sys, LabelId eq, VarId v)
{
    Registry& reg = sys.registry();
    ExactIntegrateResult res;
    res.eq = eq;
    VarSet eqvars = expression_vars(reg, sys.eq(eq).value);
    if (!eqvars.contains(v))
        throw std::runtime_error("equation does not involve " + reg.var(v).name);

    for (int guard = 0; guard < 100; ++guard) {
        FuncExpr value = sys.eq(eq).value;
        auto blockers = blocking_terms(reg, value, v);
        if (blockers.empty())
            break;
        const auto& [k, c] = blockers.front();
        const FuncSymbol& f = reg.func(k.sym);
        if (c.free_of(v) && !eqvars.subset_of(f.deps)) {
            // c = d_v: replace the blocking function throughout the system
            FuncId d = reg.fresh_function(f.deps, FuncOrigin::integration);
            FuncExpr rhs = FuncExpr::term(d, MultiIndex::single(v));
            sys.record_rename(k.sym, rhs);
            res.renames.push_back(RenameRecord{k.sym, d, rhs - FuncExpr::symbol(k.sym), false});
        } else {
            // name the whole term: d with d_v = c * f_J
            VarSet deps = c.vars().united(f.deps);
            deps.add(v);
            FuncId d = reg.fresh_function(deps, FuncOrigin::integration);
            FuncExpr term = func_term(k.sym, k.idx, c);
            FuncExpr defining = FuncExpr::term(d, MultiIndex::single(v)) - term;
            res.renames.push_back(RenameRecord{k.sym, d, defining, true});
            sys.rewrite_equation(eq, value - term + FuncExpr::term(d, MultiIndex::single(v)));
        }
    }

    FuncExpr value = sys.eq(eq).value;
    auto [s, r] = peel_derivative(reg, value, v);
    if (!r.is_zero())
        throw std::runtime_error("equation is not exact in " + reg.var(v).name);
    VarSet deps = expression_vars(reg, value);
    deps.remove(v);
    FuncId g = reg.fresh_function(deps, FuncOrigin::integration);
    res.introduced = g;
    sys.rewrite_equation(eq, s - FuncExpr::symbol(g));
    return res;
}

std::vector<LabelId> direct_separate(System& sys, LabelId eq, VarId v)
{
    Registry& reg = sys.registry();
    const FuncExpr value = sys.eq(eq).value;
    for (const auto& [k, c] : value.terms())
        if (reg.func(k.sym).deps.contains(v))
            throw std::runtime_error("cannot separate: " + reg.func(k.sym).name + " depends on " +
                                     reg.var(v).name);
    std::map<std::uint32_t, FuncExpr> buckets;
    for (const auto& [k, c] : value.terms()) {
        for (const auto& [m, a] : c.terms()) {
            std::uint32_t p = m.order(v);
            Monomial rest = p > 0 ? m.minus(Monomial::single(v, p)) : m;
            buckets[p].add_term(k.sym, k.idx, Poly::monomial(rest, a));
        }
    }
    std::vector<LabelId> out;
    bool first = true;
    for (auto& [p, expr] : buckets) {
        if (first) {
            sys.rewrite_equation(eq, std::move(expr));
            out.push_back(eq);
            first = false;
        } else {
            out.push_back(sys.add_basis_equation(std::move(expr)));
        }
    }
    return out;
}

void substitute_function(System& sys, LabelId eq, FuncId f)
{
    Registry& reg = sys.registry();
    const Equation& e = sys.eq(eq);
    const Poly* c = e.value.find(f, MultiIndex{});
    if (!c || !c->is_constant())
        throw std::runtime_error(reg.func(f).name +
                                 " does not occur algebraically with constant coefficient");
    for (const auto& [k, cc] : e.value.terms())
        if (k.sym == f && !k.idx.empty())
            throw std::runtime_error(reg.func(f).name + " occurs differentiated");
    VarSet eqvars = expression_vars(reg, e.value);
    if (!eqvars.subset_of(reg.func(f).deps))
        throw std::runtime_error(reg.func(f).name + " does not depend on all equation variables");
    Rational a = c->constant_value();
    FuncExpr rhs = (FuncExpr::symbol(f) - e.value.scaled(Rational(1) / a));
    sys.archive_definition(eq, f, rhs);
}

bool ise_lite(System& sys, const Ranking& rk, LabelId eq)
{
    Registry& reg = sys.registry();
    const FuncExpr value = sys.eq(eq).value;
    if (value.is_zero())
        return false;
    VarSet eqvars = expression_vars(reg, value);
    for (const auto& [k, c] : value.terms())
        if (eqvars.subset_of(reg.func(k.sym).deps))
            return false; // not indirectly separable: a principal function exists

    for (VarId v : eqvars.to_vector()) {
        bool coeffs_ok = true, kills = false, survives = false;
        for (const auto& [k, c] : value.terms()) {
            if (!c.free_of(v))
                coeffs_ok = false;
            if (reg.func(k.sym).deps.contains(v))
                survives = true;
            else
                kills = true;
        }
        if (!coeffs_ok || !kills || !survives)
            continue;

        FuncExpr h = total_derivative(reg, value, v);
        if (h.is_zero())
            continue;

        // separation variable: explicit in h, no h-function depends on it
        std::optional<VarId> w;
        for (VarId cand : expression_vars(reg, h).to_vector()) {
            bool explicit_occurrence = false, in_function = false;
            for (const auto& [k, c] : h.terms()) {
                if (!c.free_of(cand))
                    explicit_occurrence = true;
                if (reg.func(k.sym).deps.contains(cand))
                    in_function = true;
            }
            if (explicit_occurrence && !in_function) {
                w = cand;
                break;
            }
        }

        std::vector<FuncExpr> pieces;
        if (w) {
            std::map<std::uint32_t, FuncExpr> buckets;
            for (const auto& [k, c] : h.terms())
                for (const auto& [m, a] : c.terms()) {
                    std::uint32_t p = m.order(*w);
                    Monomial rest = p > 0 ? m.minus(Monomial::single(*w, p)) : m;
                    buckets[p].add_term(k.sym, k.idx, Poly::monomial(rest, a));
                }
            for (auto& [p, piece] : buckets)
                pieces.push_back(std::move(piece));
        } else {
            pieces.push_back(h);
        }

        // back-integrate each piece with respect to v
        std::vector<LabelId> newbies;
        for (const FuncExpr& piece : pieces) {
            auto [s, r] = peel_derivative(reg, piece, v);
            if (!r.is_zero())
                return false;
            VarSet deps = expression_vars(reg, piece);
            deps.remove(v);
            FuncId g = reg.fresh_function(deps, FuncOrigin::integration);
            newbies.push_back(sys.add_basis_equation(s - FuncExpr::symbol(g)));
        }

        // eliminate the back-integrated leads from the original
        FuncExpr residual = value;
        for (int guard = 0; guard < 200; ++guard) {
            bool reduced = false;
            for (LabelId nb : newbies) {
                const FuncExpr& nv = sys.eq(nb).value;
                auto [lead, lc] = rk.leading_term(nv);
                if (!lc.is_constant())
                    continue;
                for (const auto& [k, c] : residual.terms()) {
                    if (k.sym != lead.sym || !k.idx.contains(lead.idx))
                        continue;
                    MultiIndex theta = k.idx.minus(lead.idx);
                    Poly factor = c * Poly(Rational(1) / lc.constant_value());
                    residual -= derive_multi(reg, nv, theta).scaled(factor);
                    reduced = true;
                    break;
                }
                if (reduced)
                    break;
            }
            if (!reduced)
                break;
        }
        sys.rewrite_equation(eq, residual);
        return true;
    }
    return false;
}

} // namespace syzint
