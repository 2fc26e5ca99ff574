#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace syzint;
using namespace syzint::testing;

TEST_CASE("redundancy estimate")
{
    Registry reg;
    VarId x1 = reg.add_variable("x1");
    VarId x2 = reg.add_variable("x2");
    VarId x3 = reg.add_variable("x3");
    VarId y1 = reg.add_variable("y1");
    VarId y2 = reg.add_variable("y2");
    VarId y3 = reg.add_variable("y3");

    // f_yzz: orders 1 and 2
    CHECK(redundancy_estimate(MultiIndex::single(y1).plus(y2, 2)) == 2);
    // c4_x3x3y2y3: orders 2, 1, 1
    CHECK(redundancy_estimate(MultiIndex::single(x3, 2).plus(y2).plus(y3)) == 5);
    // c4_x1x2x3x3x3y1y2y2: orders 1, 1, 3, 1, 2. The double sum gives 24;
    // the text next to the formula prints 21, which the formula cannot yield.
    CHECK(redundancy_estimate(
              MultiIndex::single(x1).plus(x2).plus(x3, 3).plus(y1).plus(y2, 2)) == 24);
    CHECK(redundancy_estimate(MultiIndex::single(x1, 4)) == 0);
}

TEST_CASE("monomial integration")
{
    SUBCASE("f_yzz")
    {
        XyzContext c;
        System sys(std::move(c.reg));
        const Registry& reg = sys.registry();
        LabelId e1 = sys.add_basis_equation(pe(reg, "f_yzz"));
        auto res = monomial_integrate(sys, e1);
        CHECK(res.solved == c.f);
        CHECK(res.introduced.size() == 3);
        // c1(x,z) + c2(x,y) + z c3(x,y)
        CHECK(res.rhs == pe(reg, "c1 + c2 + z*c3"));
        VarSet xz, xy;
        xz.add(c.x);
        xz.add(c.z);
        xy.add(c.x);
        xy.add(c.y);
        CHECK(reg.func(res.introduced[0]).deps == xz);
        CHECK(reg.func(res.introduced[1]).deps == xy);
        CHECK(reg.func(res.introduced[2]).deps == xy);
        CHECK(res.overlap_estimate == 2);
        CHECK(res.overlap_nvars == 1);
        CHECK(sys.eq(e1).status == EqStatus::definition);
    }
    SUBCASE("f_xx")
    {
        XyzContext c;
        System sys(std::move(c.reg));
        LabelId e1 = sys.add_basis_equation(pe(sys.registry(), "f_xx"));
        auto res = monomial_integrate(sys, e1);
        CHECK(res.rhs == pe(sys.registry(), "c1 + x*c2"));
        CHECK(res.overlap_estimate == 0);
    }
    SUBCASE("one-variable function goes constant")
    {
        Registry reg;
        VarId x = reg.add_variable("x");
        VarSet xd;
        xd.add(x);
        reg.add_function("f", xd);
        System sys(std::move(reg));
        LabelId e1 = sys.add_basis_equation(pe(sys.registry(), "f_x"));
        auto res = monomial_integrate(sys, e1);
        CHECK(res.introduced.size() == 1);
        CHECK(sys.registry().func(res.introduced[0]).deps.empty());
    }
    SUBCASE("rejects multi-term input")
    {
        XyzContext c;
        System sys(std::move(c.reg));
        LabelId e = sys.add_basis_equation(pe(sys.registry(), "f_xx + f_z"));
        CHECK_THROWS(monomial_integrate(sys, e));
    }
}

TEST_CASE("exact integration with renaming")
{
    SUBCASE("the final y-integration of the chain")
    {
        XyzContext c;
        VarSet ydep;
        ydep.add(c.y);
        c.reg.add_function("c1", ydep, FuncOrigin::integration);
        c.reg.add_function("c2", ydep, FuncOrigin::integration);
        c.reg.add_function("c3", ydep, FuncOrigin::integration);
        c.reg.add_function("c4", ydep, FuncOrigin::integration);
        System sys(std::move(c.reg));
        const Registry& reg = sys.registry();
        LabelId e7 = sys.add_basis_equation(
            pe(reg, "f_y + 1/6*x^3*c1 - 1/2*x^2*c2 - x*z*c1 + z*c2 - x*c3 - c4"));
        Ranking rk = Ranking::total_degree(reg);
        auto res = exact_integrate_wrt(sys, e7, c.y);
        CHECK(res.renames.size() == 4);
        for (const auto& r : res.renames)
            CHECK(!r.whole_term);
        // c1..c4 renamed to c5_y..c8_y, new function of integration c9(x,z)
        CHECK(sys.eq(e7).value ==
              pe(reg, "f + 1/6*x^3*c5 - 1/2*x^2*c6 - x*z*c5 + z*c6 - x*c7 - c8 - c9"));
        VarSet xz;
        xz.add(c.x);
        xz.add(c.z);
        CHECK(reg.func(res.introduced).deps == xz);
        // differentiating the integrated equation recovers the renamed input
        FuncExpr renamed = pe(reg, "f_y + 1/6*x^3*c5_y - 1/2*x^2*c6_y - x*z*c5_y + z*c6_y "
                                   "- x*c7_y - c8_y");
        CHECK(total_derivative(reg, sys.eq(e7).value, c.y) == renamed);
        // solving for f gives the closed form; substituting back into
        // 0 = f_xx + f_z leaves the two-variable condition on c9
        substitute_function(sys, e7, c.f);
        FuncExpr f_sol = sys.resolve(FuncExpr::symbol(c.f));
        CHECK(f_sol ==
              pe(reg, "0 - 1/6*x^3*c5 + 1/2*x^2*c6 + x*z*c5 - z*c6 + x*c7 + c8 + c9"));
        FuncExpr e2 = pe(reg, "f_xx + f_z");
        FuncExpr cond = substitute_symbol(reg, e2, c.f, f_sol);
        CHECK(cond == pe(reg, "c9_xx + c9_z"));
    }
    SUBCASE("plain derivative introduces one function of the complement")
    {
        XyzContext c;
        System sys(std::move(c.reg));
        LabelId e = sys.add_basis_equation(pe(sys.registry(), "f_x"));
        Ranking rk = Ranking::total_degree(sys.registry());
        auto res = exact_integrate_wrt(sys, e, c.x);
        CHECK(res.renames.empty());
        VarSet yz;
        yz.add(c.y);
        yz.add(c.z);
        CHECK(sys.registry().func(res.introduced).deps == yz);
        CHECK(sys.eq(e).value == pe(sys.registry(), "f - c1"));
    }
    SUBCASE("a term with variable coefficient on a blocked function is named whole")
    {
        Registry reg;
        VarId y = reg.add_variable("y");
        VarSet ydep;
        ydep.add(y);
        FuncId f = reg.add_function("f", ydep);
        FuncId cc = reg.add_function("c", ydep);
        System sys(std::move(reg));
        const Registry& r = sys.registry();
        LabelId e = sys.add_basis_equation(pe(r, "f_y + y*c"));
        Ranking rk = Ranking::total_degree(r);
        auto res = exact_integrate_wrt(sys, e, y);
        REQUIRE(res.renames.size() == 1);
        CHECK(res.renames[0].whole_term);
        FuncId d = res.renames[0].fresh;
        // defining equation 0 = d_y - y c; the new value is f + d up to the
        // constant of integration
        CHECK(res.renames[0].defining ==
              func_term(d, MultiIndex::single(y)) - FuncExpr::term(cc, MultiIndex{},
                                                                   Poly::variable(y)));
        FuncExpr value = sys.eq(e).value;
        // oracle: D_y(value) + defining-rule recovers the input
        FuncExpr dv = total_derivative(r, value, y);
        FuncExpr recovered = substitute_symbol(
            r, dv, d, FuncExpr{}); // d only appears underived in value
        CHECK(dv == func_term(f, MultiIndex::single(y)) + func_term(d, MultiIndex::single(y)));
        (void)recovered;
    }
}

TEST_CASE("direct separation")
{
    SUBCASE("the first-example split")
    {
        Registry reg;
        VarId x = reg.add_variable("x");
        VarId y = reg.add_variable("y");
        VarId z = reg.add_variable("z");
        VarSet yz;
        yz.add(y);
        yz.add(z);
        reg.add_function("g", yz);
        reg.add_function("h", yz);
        System sys(std::move(reg));
        const Registry& r = sys.registry();
        LabelId e = sys.add_basis_equation(pe(r, "x^2*g_y + x*g_z + x*h_y + h_z"));
        auto parts = direct_separate(sys, e, x);
        REQUIRE(parts.size() == 3);
        CHECK(sys.eq(parts[0]).value == pe(r, "h_z"));
        CHECK(sys.eq(parts[1]).value == pe(r, "g_z + h_y"));
        CHECK(sys.eq(parts[2]).value == pe(r, "g_y"));
        // recombined with the powers of x the parts give back the input
        FuncExpr back = sys.eq(parts[0]).value +
                        sys.eq(parts[1]).value.scaled(Poly::variable(x)) +
                        sys.eq(parts[2]).value.scaled(Poly::monomial(Monomial::single(x, 2)));
        CHECK(back == pe(r, "x^2*g_y + x*g_z + x*h_y + h_z"));
    }
    SUBCASE("v-free equation stays whole")
    {
        Registry reg;
        VarId x = reg.add_variable("x");
        VarId y = reg.add_variable("y");
        VarSet yd;
        yd.add(y);
        reg.add_function("g", yd);
        System sys(std::move(reg));
        LabelId e = sys.add_basis_equation(pe(sys.registry(), "g_y"));
        auto parts = direct_separate(sys, e, x);
        CHECK(parts == std::vector<LabelId>{e});
        CHECK(sys.eq(e).value == pe(sys.registry(), "g_y"));
    }
    SUBCASE("a single power divides out")
    {
        Registry reg;
        VarId x = reg.add_variable("x");
        VarId y = reg.add_variable("y");
        VarSet yd;
        yd.add(y);
        reg.add_function("g", yd);
        System sys(std::move(reg));
        LabelId e = sys.add_basis_equation(pe(sys.registry(), "x^2*g"));
        auto parts = direct_separate(sys, e, x);
        REQUIRE(parts.size() == 1);
        CHECK(sys.eq(parts[0]).value == pe(sys.registry(), "g"));
    }
    SUBCASE("functions of the variable block separation")
    {
        XyzContext c;
        System sys(std::move(c.reg));
        LabelId e = sys.add_basis_equation(pe(sys.registry(), "x*f_y"));
        CHECK_THROWS(direct_separate(sys, e, c.x));
    }
}

TEST_CASE("substitute function")
{
    SUBCASE("definition flows through the system")
    {
        Registry reg;
        VarId x = reg.add_variable("x");
        VarId y = reg.add_variable("y");
        VarId z = reg.add_variable("z");
        (void)x;
        VarSet yz;
        yz.add(y);
        yz.add(z);
        FuncId f = reg.add_function("f", reg.all_vars());
        reg.add_function("g", yz);
        reg.add_function("h", yz);
        System sys(std::move(reg));
        const Registry& r = sys.registry();
        LabelId def = sys.add_basis_equation(pe(r, "f - x*g - h"));
        LabelId other = sys.add_basis_equation(pe(r, "x*f_y + f_z"));
        substitute_function(sys, def, f);
        CHECK(sys.eq(def).status == EqStatus::definition);
        CHECK(sys.eq(other).value == pe(r, "x^2*g_y + x*g_z + x*h_y + h_z"));
        // re-substituting the definition reproduces the original equation
        FuncExpr again = substitute_symbol(r, pe(r, "x*f_y + f_z"), f,
                                           sys.resolve(FuncExpr::symbol(f)));
        CHECK(again == sys.eq(other).value);
    }
    SUBCASE("absent function leaves the system unchanged")
    {
        XyzContext c;
        FuncId g = c.reg.add_function("g", c.reg.all_vars());
        System sys(std::move(c.reg));
        LabelId def = sys.add_basis_equation(pe(sys.registry(), "g - f_x"));
        LabelId other = sys.add_basis_equation(pe(sys.registry(), "f_z"));
        substitute_function(sys, def, g);
        CHECK(sys.eq(other).value == pe(sys.registry(), "f_z"));
    }
    SUBCASE("preconditions")
    {
        XyzContext c;
        VarSet ydep;
        ydep.add(c.y);
        c.reg.add_function("c1", ydep, FuncOrigin::integration);
        System sys(std::move(c.reg));
        LabelId e = sys.add_basis_equation(pe(sys.registry(), "c1 + f_x"));
        // c1 does not depend on all equation variables
        FuncId c1 = *sys.registry().find_function("c1");
        CHECK_THROWS(substitute_function(sys, e, c1));
        // a derived occurrence blocks the substitution
        LabelId e2 = sys.add_basis_equation(pe(sys.registry(), "f_x + f"));
        CHECK_THROWS(substitute_function(sys, e2, c.f));
        LabelId e3 = sys.add_basis_equation(pe(sys.registry(), "f + c1"));
        CHECK_NOTHROW(substitute_function(sys, e3, c.f));
    }
}

TEST_CASE("restricted indirect separation")
{
    // 0 = g1_xx + z g2_xx + g3_xx + g2 + g3_z, no function of all variables
    Registry reg;
    VarId x = reg.add_variable("x");
    VarId y = reg.add_variable("y");
    VarId z = reg.add_variable("z");
    VarSet xy, xz;
    xy.add(x);
    xy.add(y);
    xz.add(x);
    xz.add(z);
    FuncId g1 = reg.add_function("g1", xy, FuncOrigin::integration);
    FuncId g2 = reg.add_function("g2", xy, FuncOrigin::integration);
    FuncId g3 = reg.add_function("g3", xz, FuncOrigin::integration);
    (void)g1;
    (void)g2;
    (void)g3;
    System sys(std::move(reg));
    const Registry& r = sys.registry();
    LabelId e = sys.add_basis_equation(pe(r, "g1_xx + z*g2_xx + g3_xx + g2 + g3_z"));
    Ranking rk = Ranking::total_degree(r);
    REQUIRE(ise_lite(sys, rk, e));
    // back-integrated pieces: 0 = g2_xx - c1(x), 0 = g1_xx + g2 - c2(x)
    std::vector<LabelId> act = sys.active();
    REQUIRE(act.size() == 3);
    CHECK(sys.eq(act[1]).value == pe(r, "g1_xx + g2 - c1"));
    CHECK(sys.eq(act[2]).value == pe(r, "g2_xx - c2"));
    // the original is reduced to the g3 condition
    CHECK(sys.eq(act[0]).value == pe(r, "g3_xx + g3_z + c1 + z*c2"));
    (void)y;
}
