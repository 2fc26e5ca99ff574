#pragma once

#include <optional>

#include "syzint/linexpr.hpp"
#include "syzint/registry.hpp"

namespace syzint {

inline VarSet deps_of(const Registry& reg, FuncId f) { return reg.func(f).deps; }
/// Equation labels stand for expressions in the unknowns; they depend on
/// every independent variable.
inline VarSet deps_of(const Registry& reg, LabelId) { return reg.all_vars(); }

/// Total derivative D_v: D_v(p * s_J) = (d_v p) * s_J + p * s_{J+v}, with the
/// prolonged term dropped when the symbol does not depend on v.
template <class Sym>
LinExpr<Sym> total_derivative(const Registry& reg, const LinExpr<Sym>& e, VarId v)
{
    LinExpr<Sym> out;
    for (const auto& [k, c] : e.terms()) {
        Poly dc = c.derivative(v);
        if (!dc.is_zero())
            out.add_term(k.sym, k.idx, dc);
        if (deps_of(reg, k.sym).contains(v))
            out.add_term(k.sym, k.idx.plus(v), c);
    }
    return out;
}

template <class Sym>
LinExpr<Sym> derive_multi(const Registry& reg, LinExpr<Sym> e, const MultiIndex& j)
{
    for (const auto& [v, k] : j.entries())
        for (std::uint32_t i = 0; i < k; ++i)
            e = total_derivative(reg, e, v);
    return e;
}

/// Replace every derivative of `s` by the corresponding derivative of `repl`.
template <class Sym>
LinExpr<Sym> substitute_symbol(const Registry& reg, const LinExpr<Sym>& e, Sym s,
                               const LinExpr<Sym>& repl)
{
    LinExpr<Sym> out;
    for (const auto& [k, c] : e.terms()) {
        if (k.sym == s)
            out += derive_multi(reg, repl, k.idx).scaled(c);
        else
            out.add_term(k.sym, k.idx, c);
    }
    return out;
}

template <class Sym>
struct PeelResult {
    LinExpr<Sym> integrated; ///< S with E = D_v(S) + R
    LinExpr<Sym> remainder;  ///< R, free of terms removable by the peeling rules
};

/// Term-wise integration in v. Rule (a): a v-derivative loses one order,
/// re-peeling the coefficient remainder. Rule (b): a v-free symbol with a
/// v-dependent coefficient integrates through poly antiderivative.
template <class Sym>
PeelResult<Sym> peel_derivative(const Registry& reg, const LinExpr<Sym>& e, VarId v)
{
    PeelResult<Sym> res;
    LinExpr<Sym> work = e;
    // rule (a) corrections strictly lower the v-order, so the rounds end
    while (!work.is_zero()) {
        LinExpr<Sym> next;
        for (const auto& [k, c] : work.terms()) {
            if (k.idx.order(v) >= 1) {
                MultiIndex j = k.idx.minus_one(v);
                res.integrated.add_term(k.sym, j, c);
                Poly dc = c.derivative(v);
                if (!dc.is_zero())
                    next.add_term(k.sym, j, -dc); // re-peeled next round
            } else if (!deps_of(reg, k.sym).contains(v)) {
                res.integrated.add_term(k.sym, k.idx, c.antiderivative(v));
            } else {
                res.remainder.add_term(k.sym, k.idx, c);
            }
        }
        work = std::move(next);
    }
    return res;
}

template <class Sym>
struct DivergenceFormT {
    std::vector<VarId> vars;              ///< divergence directions, ascending
    std::map<VarId, LinExpr<Sym>> comp;   ///< the P^i
};

using DivergenceForm = DivergenceFormT<LabelId>;

/// Write E as sum_i D_i P^i over the given directions, or fail. Later
/// directions are integrated first so mixed-derivative terms land in the
/// highest component; every listed direction must end up with a nonzero
/// component.
template <class Sym>
std::optional<DivergenceFormT<Sym>> divergence_decompose(const Registry& reg,
                                                         const LinExpr<Sym>& e,
                                                         std::vector<VarId> vars)
{
    DivergenceFormT<Sym> out;
    std::sort(vars.begin(), vars.end());
    out.vars = vars;
    LinExpr<Sym> rem = e;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        auto [s, r] = peel_derivative(reg, rem, *it);
        if (s.is_zero())
            return std::nullopt;
        out.comp.emplace(*it, std::move(s));
        rem = std::move(r);
    }
    if (!rem.is_zero())
        return std::nullopt;
    return out;
}

template <class Sym>
struct CurlFormT {
    std::vector<VarId> vars;
    /// P^{ij} for i<j; P^{ji} = -P^{ij}.
    std::map<std::pair<VarId, VarId>, LinExpr<Sym>> comp;

    LinExpr<Sym> at(VarId i, VarId j) const
    {
        if (i < j) {
            auto it = comp.find({i, j});
            return it == comp.end() ? LinExpr<Sym>{} : it->second;
        }
        auto it = comp.find({j, i});
        return it == comp.end() ? LinExpr<Sym>{} : -it->second;
    }
};

using CurlForm = CurlFormT<LabelId>;

/// One syzygy per first index i (parallel to vars); each row must peel to
/// zero remainder over the other directions and the rows must agree under
/// antisymmetry.
template <class Sym>
std::optional<CurlFormT<Sym>> curl_decompose(const Registry& reg,
                                             const std::vector<LinExpr<Sym>>& syzygies,
                                             const std::vector<VarId>& vars)
{
    if (syzygies.empty() || syzygies.size() != vars.size())
        return std::nullopt;
    std::map<std::pair<VarId, VarId>, LinExpr<Sym>> rows; // (i, j) -> P^{ij}, all orders
    for (std::size_t r = 0; r < vars.size(); ++r) {
        VarId i = vars[r];
        LinExpr<Sym> rem = syzygies[r];
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
            if (*it == i)
                continue;
            auto [s, rest] = peel_derivative(reg, rem, *it);
            rows[{i, *it}] = std::move(s);
            rem = std::move(rest);
        }
        if (!rem.is_zero())
            return std::nullopt;
    }
    CurlFormT<Sym> out;
    out.vars = vars;
    for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b) {
            VarId i = std::min(vars[a], vars[b]), j = std::max(vars[a], vars[b]);
            LinExpr<Sym> pij = rows[{i, j}];
            if (!(pij + rows[{j, i}]).is_zero())
                return std::nullopt; // antisymmetry mismatch
            if (!pij.is_zero())
                out.comp.emplace(std::make_pair(i, j), std::move(pij));
        }
    return out;
}

} // namespace syzint
