#pragma once

#include <map>
#include <stdexcept>

#include "syzint/expvec.hpp"
#include "syzint/numeric.hpp"

namespace syzint {

/// Exact multivariate polynomial over the rationals in the independent
/// variables. No zero coefficients are stored; monomials sit in canonical
/// (graded) order.
class Poly {
  public:
    Poly() = default;

    /*implicit*/ Poly(const Rational& c)
    {
        if (!syzint::is_zero(c))
            t_.emplace(Monomial{}, c);
    }
    /*implicit*/ Poly(long n) : Poly(rat(n)) {}

    static Poly monomial(const Monomial& m, const Rational& c = 1)
    {
        Poly p;
        if (!syzint::is_zero(c))
            t_insert(p.t_, m, c);
        return p;
    }
    static Poly variable(VarId v) { return monomial(Monomial::single(v)); }

    bool is_zero() const { return t_.empty(); }

    bool is_constant() const
    {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
    }

    /// Value of a constant polynomial (zero for the empty one).
    Rational constant_value() const
    {
        if (t_.empty())
            return 0;
        if (!is_constant())
            throw std::logic_error("constant_value on non-constant polynomial");
        return t_.begin()->second;
    }

    std::uint32_t total_degree() const
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : t_)
            d = std::max(d, m.total());
        return d;
    }

    bool free_of(VarId v) const
    {
        for (const auto& [m, c] : t_)
            if (m.order(v) > 0)
                return false;
        return true;
    }

    VarSet vars() const
    {
        VarSet s;
        for (const auto& [m, c] : t_)
            s = s.united(m.vars());
        return s;
    }

    Poly& operator+=(const Poly& o)
    {
        for (const auto& [m, c] : o.t_)
            t_add(t_, m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        for (const auto& [m, c] : o.t_)
            t_add(t_, m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const
    {
        Poly p;
        for (const auto& [m, c] : t_)
            p.t_.emplace(m, -c);
        return p;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly p;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_)
                t_add(p.t_, ma.plus(mb), ca * cb);
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const
    {
        Poly p;
        if (syzint::is_zero(c))
            return p;
        for (const auto& [m, k] : t_)
            p.t_.emplace(m, k * c);
        return p;
    }

    /// Partial derivative with respect to v.
    Poly derivative(VarId v) const
    {
        Poly p;
        for (const auto& [m, c] : t_) {
            std::uint32_t k = m.order(v);
            if (k > 0)
                t_add(p.t_, m.minus_one(v), c * k);
        }
        return p;
    }

    /// Antiderivative in v with zero constant of integration.
    Poly antiderivative(VarId v) const
    {
        Poly p;
        for (const auto& [m, c] : t_) {
            std::uint32_t k = m.order(v);
            p.t_.emplace(m.plus(v), c / Rational(k + 1));
        }
        return p;
    }

    const std::map<Monomial, Rational>& terms() const { return t_; }

    /// Leading (canonically largest) monomial coefficient; zero polynomial
    /// has none.
    const Rational& leading_coeff() const { return t_.rbegin()->second; }
    const Monomial& leading_monomial() const { return t_.rbegin()->first; }

    bool operator==(const Poly&) const = default;

  private:
    static void t_insert(std::map<Monomial, Rational>& t, const Monomial& m, const Rational& c)
    {
        t.emplace(m, c);
    }
    static void t_add(std::map<Monomial, Rational>& t, const Monomial& m, const Rational& c)
    {
        auto it = t.find(m);
        if (it == t.end()) {
            if (!syzint::is_zero(c))
                t.emplace(m, c);
        } else {
            it->second += c;
            if (syzint::is_zero(it->second))
                t.erase(it);
        }
    }

    std::map<Monomial, Rational> t_;
};

} // namespace syzint
