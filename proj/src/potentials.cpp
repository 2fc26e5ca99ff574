#include "syzint/potentials.hpp"

#include <algorithm>

#include "syzint/io.hpp"

namespace syzint {

namespace {

int perm_sign3(VarId i, VarId j, VarId k)
{
    int s = 1;
    if (i > j) {
        std::swap(i, j);
        s = -s;
    }
    if (j > k) {
        std::swap(j, k);
        s = -s;
    }
    if (i > j) {
        std::swap(i, j);
        s = -s;
    }
    return s;
}

struct DivintState {
    Registry& reg;
    std::vector<VarId> vars;
    std::map<VarId, FuncExpr> P;
    PotentialResult& out;

    /// Q^{ij} += delta with antisymmetric storage, residuals kept exact:
    /// P^i -= D_j(delta), P^j += D_i(delta).
    void transfer(VarId i, VarId j, const FuncExpr& delta)
    {
        add_q(i, j, delta);
        P[i] -= total_derivative(reg, delta, j);
        P[j] += total_derivative(reg, delta, i);
    }

    void add_q(VarId i, VarId j, const FuncExpr& delta)
    {
        if (i < j)
            q_ref(i, j) += delta;
        else
            q_ref(j, i) -= delta;
    }

    FuncExpr& q_ref(VarId i, VarId j) { return out.Q[{i, j}]; }

    /// Highest j-order term of P^i, if any derivative of j occurs.
    std::optional<std::pair<DerivTerm<FuncId>, Poly>> max_j_term(VarId i, VarId j) const
    {
        auto it = P.find(i);
        if (it == P.end())
            return std::nullopt;
        const DerivTerm<FuncId>* best = nullptr;
        const Poly* coeff = nullptr;
        for (const auto& [k, c] : it->second.terms()) {
            if (k.idx.order(j) == 0)
                continue;
            if (!best || k.idx.order(j) > best->idx.order(j)) {
                best = &k;
                coeff = &c;
            }
        }
        if (!best)
            return std::nullopt;
        return std::make_pair(*best, *coeff);
    }

    bool phase1()
    {
        bool any = false;
        for (std::size_t a = 0; a < vars.size(); ++a) {
            for (std::size_t b = a + 1; b < vars.size(); ++b) {
                VarId i = vars[a], j = vars[b];
                while (auto t = max_j_term(i, j)) {
                    FuncExpr u = func_term(t->first.sym, t->first.idx.minus_one(j), t->second);
                    transfer(i, j, u);
                    any = true;
                }
            }
        }
        return any;
    }

    bool phase2()
    {
        bool any = false;
        for (std::size_t a = 1; a < vars.size(); ++a) {
            for (std::size_t b = 0; b < a; ++b) {
                VarId i = vars[a], j = vars[b];
                bool moved = true;
                while (moved) {
                    moved = false;
                    for (const auto& [k, c] : P[i].terms()) {
                        if (k.idx.order(j) == 0)
                            continue;
                        // only sound when the move leaves P^j untouched
                        if (reg.func(k.sym).deps.contains(i) || !c.free_of(i))
                            continue;
                        FuncExpr u = func_term(k.sym, k.idx.minus_one(j), c);
                        transfer(i, j, u);
                        any = moved = true;
                        break;
                    }
                }
            }
        }
        return any;
    }

    bool phase3()
    {
        bool any = false;
        for (VarId i : vars) {
            while (!P[i].is_zero()) {
                auto [k, c] = *P[i].terms().begin();
                // prefer an integration variable the function is free of
                std::optional<VarId> pick;
                for (VarId j : vars) {
                    if (j == i)
                        continue;
                    if (!reg.func(k.sym).deps.contains(j)) {
                        pick = j;
                        break;
                    }
                }
                if (pick) {
                    FuncExpr q = func_term(k.sym, k.idx, c.antiderivative(*pick));
                    transfer(i, *pick, q);
                } else {
                    // integrate by naming the term: 0 = d_j f^beta - a f_J,
                    // j the cyclic successor of i in the context
                    VarId j = cyclic_next(i);
                    VarSet deps = reg.all_vars();
                    deps.remove(i);
                    FuncId beta = reg.fresh_function(deps, FuncOrigin::divint_auxiliary);
                    out.F.push_back(beta);
                    out.E.push_back(AuxEquation{func_term(beta, MultiIndex::single(j)) -
                                                    func_term(k.sym, k.idx, c),
                                                i});
                    add_q(i, j, FuncExpr::symbol(beta));
                    P[i] -= func_term(k.sym, k.idx, c);
                }
                any = true;
            }
        }
        return any;
    }

    VarId cyclic_next(VarId i) const
    {
        auto it = std::find(vars.begin(), vars.end(), i);
        ++it;
        return it == vars.end() ? vars.front() : *it;
    }

    bool all_zero() const
    {
        for (const auto& [v, e] : P)
            if (!e.is_zero())
                return false;
        return true;
    }

    void run()
    {
        for (int pass = 0; pass < 200; ++pass) {
            phase1();
            phase2();
            phase3();
            if (all_zero()) {
                std::erase_if(out.Q, [](const auto& kv) { return kv.second.is_zero(); });
                return;
            }
        }
        throw DivintError("potential construction did not settle");
    }
};

FuncExpr reduce_by_aux(const Registry& reg, FuncExpr e,
                       const std::vector<CurlAuxEquation>& aux)
{
    for (int guard = 0; guard < 50 && !e.is_zero(); ++guard) {
        bool matched = false;
        for (const auto& a : aux) {
            const auto& [lead, lc] = *a.value.terms().rbegin();
            for (const auto& [t, c] : e.terms()) {
                if (t.sym != lead.sym || !t.idx.contains(lead.idx))
                    continue;
                Poly factor = c * Poly(Rational(1) / lc.constant_value());
                e -= derive_multi(reg, a.value, t.idx.minus(lead.idx)).scaled(factor);
                matched = true;
                break;
            }
            if (matched)
                break;
        }
        if (!matched)
            break;
    }
    return e;
}

} // namespace

PotentialResult divint(Registry& reg, const std::map<VarId, FuncExpr>& P,
                       const std::vector<VarId>& vars)
{
    FuncExpr div;
    for (const auto& [v, e] : P)
        div += total_derivative(reg, e, v);
    if (!div.is_zero())
        throw DivintError("input current is not conserved, divergence residual: " +
                          print_expr(reg, div));

    PotentialResult out;
    std::vector<VarId> vs = vars;
    std::sort(vs.begin(), vs.end());
    DivintState st{reg, vs, {}, out};
    for (VarId v : vs) {
        auto it = P.find(v);
        st.P[v] = it == P.end() ? FuncExpr{} : it->second;
    }
    st.run();
    return out;
}

FuncExpr CurlPotentialResult::at(VarId i, VarId j, VarId k) const
{
    if (i == j || j == k || i == k)
        return FuncExpr{};
    VarId a = std::min({i, j, k}), c = std::max({i, j, k});
    VarId b = VarId{i.value + j.value + k.value - a.value - c.value};
    auto it = Q3.find({a, b, c});
    if (it == Q3.end())
        return FuncExpr{};
    return perm_sign3(i, j, k) > 0 ? it->second : -it->second;
}

CurlPotentialResult curlint(Registry& reg,
                            const std::map<std::pair<VarId, VarId>, FuncExpr>& P2,
                            const std::vector<VarId>& vars)
{
    auto row_component = [&](VarId i, VarId j) -> FuncExpr {
        auto it = P2.find({std::min(i, j), std::max(i, j)});
        if (it == P2.end())
            return FuncExpr{};
        return i < j ? it->second : -it->second;
    };

    CurlPotentialResult out;
    std::vector<VarId> vs = vars;
    std::sort(vs.begin(), vs.end());
    // row i only solves for the triples whose smallest index is i; earlier
    // rows' triples are subtracted first, so the rows agree by construction
    for (VarId i : vs) {
        std::vector<VarId> later;
        for (VarId v : vs)
            if (i < v)
                later.push_back(v);
        std::map<VarId, FuncExpr> row;
        for (VarId j : vs) {
            if (j == i)
                continue;
            FuncExpr known;
            for (VarId k : vs)
                if (!(k == i) && !(k == j))
                    known += total_derivative(reg, out.at(i, j, k), k);
            FuncExpr residual = row_component(i, j) - known;
            if (j < i || later.size() < 2) {
                residual = reduce_by_aux(reg, std::move(residual), out.E);
                if (!residual.is_zero())
                    throw DivintError("curl rows are inconsistent at P^{" + reg.var(i).name +
                                      reg.var(j).name + "}");
            } else {
                row[j] = std::move(residual);
            }
        }
        if (later.size() < 2)
            continue;
        FuncExpr div;
        for (const auto& [v, e] : row)
            div += total_derivative(reg, e, v);
        if (!div.is_zero())
            throw DivintError("curl row " + reg.var(i).name + " is not conserved");
        PotentialResult part;
        DivintState st{reg, later, row, part};
        for (VarId v : later)
            st.P.try_emplace(v, FuncExpr{});
        st.run();
        for (auto& [jk, q] : part.Q) {
            auto [j, k] = jk;
            out.Q3.emplace(std::make_tuple(i, j, k), std::move(q));
        }
        for (auto& e : part.E)
            out.E.push_back(CurlAuxEquation{std::move(e.value), {i, e.component}});
        for (FuncId f : part.F)
            out.F.push_back(f);
    }
    std::erase_if(out.Q3, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

} // namespace syzint
