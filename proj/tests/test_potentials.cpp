#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace syzint;
using namespace syzint::testing;

namespace {

/// Oracle: differentiate the computed potentials and compare with the input,
/// allowing the defining equations E as exact rewrite rules.
bool potentials_reproduce(const Registry& reg, const std::map<VarId, FuncExpr>& P,
                          const std::vector<VarId>& vars, const PotentialResult& q)
{
    for (VarId i : vars) {
        FuncExpr sum;
        for (VarId j : vars)
            if (!(j == i))
                sum += total_derivative(reg, q.at(i, j), j);
        FuncExpr residual = (P.count(i) ? P.at(i) : FuncExpr{}) - sum;
        // reduce by the defining equations 0 = d_j f^beta - a f_J
        for (int guard = 0; guard < 50 && !residual.is_zero(); ++guard) {
            bool matched = false;
            for (const auto& a : q.E) {
                const auto& [lead, lc] = *a.value.terms().rbegin();
                for (const auto& [t, c] : residual.terms()) {
                    if (t.sym != lead.sym || !t.idx.contains(lead.idx))
                        continue;
                    MultiIndex theta = t.idx.minus(lead.idx);
                    Poly factor = c * Poly(Rational(1) / lc.constant_value());
                    residual -= derive_multi(reg, a.value, theta).scaled(factor);
                    matched = true;
                    break;
                }
                if (matched)
                    break;
            }
            if (!matched)
                break;
        }
        if (!residual.is_zero())
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("the introductory potential")
{
    XyzContext c;
    std::map<VarId, FuncExpr> P;
    P[c.x] = -pe(c.reg, "f_xyzz");
    P[c.z] = pe(c.reg, "f_xxyz");
    PotentialResult q = divint(c.reg, P, {c.x, c.z});
    CHECK(q.at(c.x, c.z) == -pe(c.reg, "f_xyz"));
    CHECK(q.E.empty());
    CHECK(q.F.empty());
    CHECK(potentials_reproduce(c.reg, P, {c.x, c.z}, q));
}

TEST_CASE("zero input gives zero output")
{
    XyzContext c;
    std::map<VarId, FuncExpr> P;
    PotentialResult q = divint(c.reg, P, {c.x, c.y, c.z});
    CHECK(q.Q.empty());
    CHECK(q.E.empty());
    CHECK(q.F.empty());
}

TEST_CASE("non-conserved input is rejected with the residual")
{
    XyzContext c;
    std::map<VarId, FuncExpr> P;
    P[c.x] = pe(c.reg, "f_x");
    CHECK_THROWS_AS(divint(c.reg, P, {c.x, c.z}), DivintError);
}

TEST_CASE("the worked three-variable example")
{
    Registry reg;
    VarId x = reg.add_variable("x");
    VarId y = reg.add_variable("y");
    VarId z = reg.add_variable("z");
    auto dep = [&](std::initializer_list<VarId> vs) {
        VarSet s;
        for (VarId v : vs)
            s.add(v);
        return s;
    };
    FuncId A = reg.add_function("A", dep({y, z}));
    FuncId B = reg.add_function("B", dep({y, z}));
    FuncId C = reg.add_function("C", dep({y, z}));
    FuncId D = reg.add_function("D", dep({y}));
    FuncId G = reg.add_function("G", dep({z}));
    FuncId H = reg.add_function("H", dep({x, z}));
    FuncId K = reg.add_function("K", dep({x, z}));
    FuncId L = reg.add_function("L", dep({x}));
    FuncId M = reg.add_function("M", dep({x, z}));
    FuncId N = reg.add_function("N", dep({z}));
    FuncId R = reg.add_function("R", dep({x, y}));
    FuncId S = reg.add_function("S", dep({x, y}));
    FuncId T = reg.add_function("T", dep({x}));
    FuncId U = reg.add_function("U", dep({y}));
    FuncId W = reg.add_function("W", dep({x, y}));

    auto d1 = [&](FuncId f, VarId v) { return func_term(f, MultiIndex::single(v)); };
    auto f0 = [&](FuncId f) { return FuncExpr::symbol(f); };

    std::map<VarId, FuncExpr> P;
    P[x] = d1(A, y) + d1(B, z) + f0(C) + f0(D) + f0(G);
    P[y] = d1(H, x) + d1(K, z) + f0(L) + f0(M) + f0(N);
    P[z] = d1(R, x) + d1(S, y) + f0(T) + f0(U) + f0(W);

    std::size_t nfuncs = reg.num_functions();
    PotentialResult q = divint(reg, P, {x, y, z});

    REQUIRE(q.F.size() == 3);
    FuncId F1 = q.F[0], F2 = q.F[1], F3 = q.F[2];
    // F1(y,z), F2(x,z), F3(x,y), created in this order
    CHECK(reg.func(F1).deps == dep({y, z}));
    CHECK(reg.func(F2).deps == dep({x, z}));
    CHECK(reg.func(F3).deps == dep({x, y}));
    CHECK(reg.func(F1).origin == FuncOrigin::divint_auxiliary);
    CHECK(reg.num_functions() == nfuncs + 3);

    // Q^{xy} = A - H + yG - xN + F1
    CHECK(q.at(x, y) == f0(A) - f0(H) + f0(G).scaled(Poly::variable(y)) -
                            f0(N).scaled(Poly::variable(x)) + f0(F1));
    // Q^{xz} = B - R + zD - xU - F3
    CHECK(q.at(x, z) == f0(B) - f0(R) + f0(D).scaled(Poly::variable(z)) -
                            f0(U).scaled(Poly::variable(x)) - f0(F3));
    // Q^{yz} = K - S + zL - yT + F2
    CHECK(q.at(y, z) == f0(K) - f0(S) + f0(L).scaled(Poly::variable(z)) -
                            f0(T).scaled(Poly::variable(y)) + f0(F2));

    // E = {0 = F1_y - C, 0 = F2_z - M, 0 = F3_x - W}
    REQUIRE(q.E.size() == 3);
    CHECK(q.E[0].value == d1(F1, y) - f0(C));
    CHECK(q.E[0].component == x);
    CHECK(q.E[1].value == d1(F2, z) - f0(M));
    CHECK(q.E[1].component == y);
    CHECK(q.E[2].value == d1(F3, x) - f0(W));
    CHECK(q.E[2].component == z);

    CHECK(potentials_reproduce(reg, P, {x, y, z}, q));
}

TEST_CASE("round trip on randomized conserved currents")
{
    // currents built as D_j Q over functions of all variables come back with
    // no auxiliaries and zero residual
    for (int round = 0; round < 60; ++round) {
        Registry reg;
        VarId x = reg.add_variable("x");
        VarId y = reg.add_variable("y");
        VarId z = reg.add_variable("z");
        FuncId f = reg.add_function("f", reg.all_vars());
        FuncId g = reg.add_function("g", reg.all_vars());
        Rng rng(unsigned(500 + round));
        std::vector<VarId> vars{x, y, z};

        std::map<std::pair<VarId, VarId>, FuncExpr> Q;
        Q[{x, y}] = rng.expr(reg, vars, {f, g}, 3);
        Q[{x, z}] = rng.expr(reg, vars, {f, g}, 3);
        Q[{y, z}] = rng.expr(reg, vars, {f, g}, 3);

        auto at = [&](VarId i, VarId j) -> FuncExpr {
            if (i < j)
                return Q[{i, j}];
            return -Q[{j, i}];
        };
        std::map<VarId, FuncExpr> P;
        for (VarId i : vars) {
            FuncExpr sum;
            for (VarId j : vars)
                if (!(j == i))
                    sum += total_derivative(reg, at(i, j), j);
            P[i] = sum;
        }
        PotentialResult q = divint(reg, P, vars);
        CHECK(q.E.empty());
        CHECK(q.F.empty());
        CHECK(potentials_reproduce(reg, P, vars, q));
    }
}

TEST_CASE("curl potentials of the typical example")
{
    Registry reg;
    VarId x = reg.add_variable("x");
    VarId y = reg.add_variable("y");
    VarId z = reg.add_variable("z");
    VarId t = reg.add_variable("t");
    FuncId a = reg.add_function("a", reg.all_vars());
    FuncId b = reg.add_function("b", reg.all_vars());
    FuncId c = reg.add_function("c", reg.all_vars());
    FuncId d = reg.add_function("d", reg.all_vars());
    auto d1 = [&](FuncId f, VarId v) { return func_term(f, MultiIndex::single(v)); };

    std::map<std::pair<VarId, VarId>, FuncExpr> P2;
    P2[{x, y}] = d1(d, z) - d1(c, t);
    P2[{x, z}] = d1(b, t) - d1(d, y);
    P2[{x, t}] = d1(c, y) - d1(b, z);
    P2[{y, z}] = d1(d, x) - d1(a, t);
    P2[{y, t}] = d1(a, z) - d1(c, x);
    P2[{z, t}] = d1(b, x) - d1(a, y);

    CurlPotentialResult q = curlint(reg, P2, {x, y, z, t});
    CHECK(q.E.empty());
    CHECK(q.F.empty());
    CHECK(q.at(x, y, z) == FuncExpr::symbol(d));
    CHECK(q.at(x, y, t) == -FuncExpr::symbol(c)); // the printed Q^{txy} = c
    CHECK(q.at(x, z, t) == FuncExpr::symbol(b));
    CHECK(q.at(y, z, t) == -FuncExpr::symbol(a)); // the printed Q^{ytz} = a

    // oracle: P^{ij} = D_k Q^{ijk}
    for (auto [i, j] : std::vector<std::pair<VarId, VarId>>{
             {x, y}, {x, z}, {x, t}, {y, z}, {y, t}, {z, t}}) {
        FuncExpr sum;
        for (VarId k : {x, y, z, t})
            if (!(k == i) && !(k == j))
                sum += total_derivative(reg, q.at(i, j, k), k);
        CHECK(sum == P2[{i, j}]);
    }
}

TEST_CASE("curl round trip on randomized antisymmetric potentials")
{
    for (int round = 0; round < 20; ++round) {
        Registry reg;
        VarId x = reg.add_variable("x");
        VarId y = reg.add_variable("y");
        VarId z = reg.add_variable("z");
        VarId t = reg.add_variable("t");
        FuncId f = reg.add_function("f", reg.all_vars());
        Rng rng(unsigned(900 + round));
        std::vector<VarId> vars{x, y, z, t};

        std::map<std::tuple<VarId, VarId, VarId>, FuncExpr> Q3;
        for (auto [i, j, k] : std::vector<std::tuple<VarId, VarId, VarId>>{
                 {x, y, z}, {x, y, t}, {x, z, t}, {y, z, t}})
            Q3[{i, j, k}] = rng.expr(reg, vars, {f}, 2, 1, 1);
        CurlPotentialResult ref;
        ref.Q3 = Q3;

        std::map<std::pair<VarId, VarId>, FuncExpr> P2;
        for (std::size_t ai = 0; ai < vars.size(); ++ai)
            for (std::size_t bi = ai + 1; bi < vars.size(); ++bi) {
                VarId i = vars[ai], j = vars[bi];
                FuncExpr sum;
                for (VarId k : vars)
                    if (!(k == i) && !(k == j))
                        sum += total_derivative(reg, ref.at(i, j, k), k);
                if (!sum.is_zero())
                    P2[{i, j}] = sum;
            }
        CurlPotentialResult q = curlint(reg, P2, vars);
        // recovered potentials may differ from the seed by a gauge with
        // vanishing curl contribution
        for (std::size_t ai = 0; ai < vars.size(); ++ai)
            for (std::size_t bi = ai + 1; bi < vars.size(); ++bi) {
                VarId i = vars[ai], j = vars[bi];
                FuncExpr sum;
                for (VarId k : vars)
                    if (!(k == i) && !(k == j))
                        sum += total_derivative(reg, q.at(i, j, k), k);
                FuncExpr expect = P2.count({i, j}) ? P2[{i, j}] : FuncExpr{};
                CHECK(sum == expect);
            }
        CHECK(q.E.empty());
        CHECK(q.F.empty());
    }
}
