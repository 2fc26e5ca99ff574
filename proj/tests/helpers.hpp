#pragma once

#include <random>

#include "syzint/driver.hpp"

namespace syzint::testing {

/// Three variables x,y,z and one function f(x,y,z), the setting of most
/// worked examples.
struct XyzContext {
    Registry reg;
    VarId x, y, z;
    FuncId f;

    XyzContext()
    {
        x = reg.add_variable("x");
        y = reg.add_variable("y");
        z = reg.add_variable("z");
        f = reg.add_function("f", reg.all_vars());
    }
};

inline FuncExpr pe(const Registry& reg, const std::string& s)
{
    return parse_expression(reg, s);
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    Poly poly(const std::vector<VarId>& vars, int max_deg, int max_terms)
    {
        Poly p;
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            for (VarId v : vars) {
                int d = uniform(0, max_deg);
                if (d > 0)
                    m = m.plus(v, d);
            }
            int c = uniform(-6, 6);
            if (c == 0)
                c = 1;
            p += Poly::monomial(m, rat(c));
        }
        return p;
    }

    MultiIndex multiindex(const std::vector<VarId>& vars, int max_order)
    {
        MultiIndex j;
        for (VarId v : vars) {
            int d = uniform(0, max_order);
            if (d > 0)
                j = j.plus(v, d);
        }
        return j;
    }

    /// Well-formed expression: derivatives stay inside each function's deps.
    FuncExpr expr(const Registry& reg, const std::vector<VarId>& vars,
                  const std::vector<FuncId>& funcs, int max_terms, int max_order = 2,
                  int max_deg = 2)
    {
        FuncExpr e;
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            FuncId f = funcs[std::size_t(uniform(0, int(funcs.size()) - 1))];
            e.add_term(f, multiindex(reg.func(f).deps.to_vector(), max_order),
                       poly(vars, max_deg, 2));
        }
        return e;
    }
};

} // namespace syzint::testing
