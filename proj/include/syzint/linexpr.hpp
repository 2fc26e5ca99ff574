#pragma once

#include <map>
#include <vector>

#include "syzint/poly.hpp"

namespace syzint {

/// One derivative of a symbol: f_J for functions, e_J for equation labels.
template <class Sym>
struct DerivTerm {
    Sym sym;
    MultiIndex idx;

    bool operator==(const DerivTerm&) const = default;
    bool operator<(const DerivTerm& o) const
    {
        if (sym != o.sym)
            return sym < o.sym;
        return idx < o.idx;
    }
};

/// Linear combination of derivatives of symbols with Poly coefficients.
/// Linear homogeneous by construction: a term never carries a product of
/// two symbols. Canonical: no zero coefficients, terms sorted by
/// (symbol index, multi-index).
template <class Sym>
class LinExpr {
  public:
    using Term = DerivTerm<Sym>;

    LinExpr() = default;

    static LinExpr term(Sym s, const MultiIndex& j, Poly coeff = Poly(1))
    {
        LinExpr e;
        e.add_term(s, j, coeff);
        return e;
    }
    static LinExpr symbol(Sym s) { return term(s, MultiIndex{}); }

    void add_term(Sym s, const MultiIndex& j, const Poly& coeff)
    {
        if (coeff.is_zero())
            return;
        Term key{s, j};
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero())
                t_.erase(it);
        }
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    LinExpr& operator+=(const LinExpr& o)
    {
        for (const auto& [k, c] : o.t_)
            add_term(k.sym, k.idx, c);
        return *this;
    }
    LinExpr& operator-=(const LinExpr& o)
    {
        for (const auto& [k, c] : o.t_)
            add_term(k.sym, k.idx, -c);
        return *this;
    }
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
    LinExpr operator-() const
    {
        LinExpr e;
        for (const auto& [k, c] : t_)
            e.t_.emplace(k, -c);
        return e;
    }

    LinExpr scaled(const Poly& p) const
    {
        LinExpr e;
        for (const auto& [k, c] : t_)
            e.add_term(k.sym, k.idx, c * p);
        return e;
    }
    LinExpr scaled(const Rational& r) const
    {
        LinExpr e;
        if (syzint::is_zero(r))
            return e;
        for (const auto& [k, c] : t_)
            e.t_.emplace(k, c.scaled(r));
        return e;
    }

    const std::map<Term, Poly>& terms() const { return t_; }

    const Poly* find(Sym s, const MultiIndex& j) const
    {
        auto it = t_.find(Term{s, j});
        return it == t_.end() ? nullptr : &it->second;
    }

    bool mentions(Sym s) const
    {
        for (const auto& [k, c] : t_)
            if (k.sym == s)
                return true;
        return false;
    }

    std::vector<Sym> symbols() const
    {
        std::vector<Sym> out;
        for (const auto& [k, c] : t_)
            if (out.empty() || out.back() != k.sym)
                out.push_back(k.sym);
        return out;
    }

    bool operator==(const LinExpr&) const = default;

  private:
    std::map<Term, Poly> t_;
};

using FuncExpr = LinExpr<FuncId>;
using LabelExpr = LinExpr<LabelId>;

inline FuncExpr func_term(FuncId f, const MultiIndex& j, Poly c = Poly(1))
{
    return FuncExpr::term(f, j, std::move(c));
}
inline LabelExpr label_term(LabelId l, const MultiIndex& j, Poly c = Poly(1))
{
    return LabelExpr::term(l, j, std::move(c));
}

} // namespace syzint
