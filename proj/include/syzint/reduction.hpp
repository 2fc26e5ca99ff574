#pragma once

#include "syzint/system.hpp"

namespace syzint {

/// Rank-maximal derivative of an equation. Throws on the zero equation.
inline std::pair<DerivTerm<FuncId>, Poly> leading_derivative(const Equation& e, const Ranking& rk)
{
    if (e.value.is_zero())
        throw std::logic_error("leading derivative of zero equation " + e.name);
    return rk.leading_term(e.value);
}

/// Candidate produced by cross-differentiation or reduction: value and
/// history move in lockstep, not yet registered with the system.
struct EqCandidate {
    FuncExpr value;
    LabelExpr history;
};

/// Prolong a and b so their leading derivatives reach the least common
/// multi-index and cancel. Leading coefficients multiply through; no
/// division. Both leads must involve the same symbol.
inline EqCandidate cross_differentiate(const Registry& reg, const Equation& a, const Equation& b,
                                       const Ranking& rk)
{
    auto [la, ca] = leading_derivative(a, rk);
    auto [lb, cb] = leading_derivative(b, rk);
    if (la.sym != lb.sym)
        throw std::runtime_error("cross-differentiation needs a common leading symbol");
    MultiIndex lcm = MultiIndex::lcm(la.idx, lb.idx);
    FuncExpr va = derive_multi(reg, a.value, lcm.minus(la.idx));
    FuncExpr vb = derive_multi(reg, b.value, lcm.minus(lb.idx));
    LabelExpr ha = derive_multi(reg, a.history, lcm.minus(la.idx));
    LabelExpr hb = derive_multi(reg, b.history, lcm.minus(lb.idx));
    // cb * D(a) - ca * D(b); the prolonged leads carry ca resp. cb unchanged
    return EqCandidate{va.scaled(cb) - vb.scaled(ca), ha.scaled(cb) - hb.scaled(ca)};
}

/// A term of `a` reducible by `b`: a derivative instance of b's leading term.
inline std::optional<DerivTerm<FuncId>> find_reducible_term(const Equation& a, const Equation& b,
                                                            const Ranking& rk)
{
    auto [lb, cb] = leading_derivative(b, rk);
    const DerivTerm<FuncId>* best = nullptr;
    for (const auto& [k, c] : a.value.terms()) {
        if (k.sym != lb.sym || !k.idx.contains(lb.idx))
            continue;
        if (!best || rk.cmp_term(k, *best) > 0)
            best = &k;
    }
    if (!best)
        return std::nullopt;
    return *best;
}

/// Eliminate one occurrence of (a derivative of) b's leading term from a.
/// b must have a constant leading coefficient; the paper never reduces by an
/// equation with a non-constant one, so such reducers are rejected.
inline EqCandidate reduce(const Registry& reg, const Equation& a, const Equation& b,
                          const Ranking& rk)
{
    auto [lb, cb] = leading_derivative(b, rk);
    if (!cb.is_constant())
        throw std::runtime_error("reduction by non-constant leading coefficient of " + b.name);
    auto target = find_reducible_term(a, b, rk);
    if (!target)
        throw std::runtime_error("no term of " + a.name + " reducible by " + b.name);
    Poly coeff = *a.value.find(target->sym, target->idx);
    MultiIndex theta = target->idx.minus(lb.idx);
    Poly factor = coeff * Poly(Rational(1) / cb.constant_value());
    FuncExpr value = a.value - derive_multi(reg, b.value, theta).scaled(factor);
    LabelExpr history = a.history - derive_multi(reg, b.history, theta).scaled(factor);
    return EqCandidate{std::move(value), std::move(history)};
}

/// Scale value and history together to a monic leading coefficient; with a
/// polynomial leading coefficient only the sign is fixed.
inline EqCandidate monic_candidate(const Ranking& rk, EqCandidate cand)
{
    if (cand.value.is_zero())
        return cand;
    auto [lead, lc] = rk.leading_term(cand.value);
    if (lc.is_constant()) {
        Rational inv = Rational(1) / lc.constant_value();
        cand.value = cand.value.scaled(inv);
        cand.history = cand.history.scaled(inv);
    } else if (sgn(lc.leading_coeff()) < 0) {
        cand.value = -cand.value;
        cand.history = -cand.history;
    }
    return cand;
}

/// A zero-valued equation with a nonzero history is a syzygy; the equation
/// itself is dropped by the caller.
inline std::optional<Syzygy> harvest_syzygy(const Equation& e)
{
    if (!e.value.is_zero() || e.history.is_zero())
        return std::nullopt;
    return Syzygy{e.history};
}

} // namespace syzint
