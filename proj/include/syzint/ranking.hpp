#pragma once

#include <stdexcept>

#include "syzint/linexpr.hpp"
#include "syzint/registry.hpp"

namespace syzint {

enum class RankKind { total_degree_then_revlex, lexicographic };

/// Total ordering of derivatives, compatible with differentiation (any D_v
/// strictly raises the rank).
struct Ranking {
    RankKind kind = RankKind::total_degree_then_revlex;
    std::vector<VarId> precedence; // earlier entries weigh more

    static Ranking total_degree(const Registry& reg)
    {
        return Ranking{RankKind::total_degree_then_revlex, reg.var_order()};
    }
    static Ranking lex(const Registry& reg)
    {
        return Ranking{RankKind::lexicographic, reg.var_order()};
    }

    int cmp(const MultiIndex& a, const MultiIndex& b) const
    {
        switch (kind) {
        case RankKind::total_degree_then_revlex:
            return ExpVec::cmp_grevlex(a, b, precedence);
        case RankKind::lexicographic:
            return ExpVec::cmp_lex(a, b, precedence);
        }
        return 0;
    }

    /// Rank (symbol, multi-index) pairs: the multi-index decides, earlier
    /// registry symbols break ties.
    template <class Sym>
    int cmp_term(const DerivTerm<Sym>& a, const DerivTerm<Sym>& b) const
    {
        int c = cmp(a.idx, b.idx);
        if (c != 0)
            return c;
        if (a.sym != b.sym)
            return a.sym < b.sym ? 1 : -1;
        return 0;
    }

    /// Rank-maximal term with nonzero coefficient.
    template <class Sym>
    std::pair<DerivTerm<Sym>, Poly> leading_term(const LinExpr<Sym>& e) const
    {
        if (e.is_zero())
            throw std::logic_error("leading term of zero expression");
        const DerivTerm<Sym>* best = nullptr;
        const Poly* coeff = nullptr;
        for (const auto& [k, c] : e.terms()) {
            if (!best || cmp_term(k, *best) > 0) {
                best = &k;
                coeff = &c;
            }
        }
        return {*best, *coeff};
    }
};

/// Scale an expression so its ranking-leading coefficient is +1 when the
/// leading coefficient is a rational constant, otherwise flip the sign so the
/// leading coefficient's leading rational is positive.
template <class Sym>
LinExpr<Sym> monic_normalized(const Ranking& rk, const LinExpr<Sym>& e)
{
    if (e.is_zero())
        return e;
    auto [lead, coeff] = rk.leading_term(e);
    if (coeff.is_constant())
        return e.scaled(Rational(1) / coeff.constant_value());
    if (sgn(coeff.leading_coeff()) < 0)
        return -e;
    return e;
}

} // namespace syzint
