#pragma once

#include <functional>
#include <string>

#include "syzint/calculus.hpp"
#include "syzint/ranking.hpp"

namespace syzint {

enum class EqStatus { active, deleted, definition };

/// A labeled equation 0 = value together with its history, an expression of
/// the equation over the history basis labels. Evaluating the history against
/// the basis snapshots reproduces the value exactly.
struct Equation {
    LabelId id;
    std::string name;
    FuncExpr value;
    LabelExpr history;
    EqStatus status = EqStatus::active;
};

/// A linear differential identity among the equations; substituting each
/// label's value yields the zero expression identically.
struct Syzygy {
    LabelExpr expr;
};

/// Ranking-independent canonical sign and scale: the highest storage-key term
/// gets coefficient +1 (or a positive leading rational when polynomial).
inline LabelExpr canonical_syzygy(const LabelExpr& e)
{
    if (e.is_zero())
        return e;
    const Poly& c = e.terms().rbegin()->second;
    if (c.is_constant())
        return e.scaled(Rational(1) / c.constant_value());
    if (sgn(c.leading_coeff()) < 0)
        return -e;
    return e;
}

/// A function solved or renamed away: sym = rhs.
struct Definition {
    FuncId sym;
    FuncExpr rhs;
};

/// Record of a deleted equation and the syzygy that solves for it.
struct DeletionRecord {
    LabelId label;
    LabelExpr solved_as; ///< omega with e_label = omega
    LabelExpr syzygy;    ///< the syzygy it was solved from
};

/// The equation store: registry, labeled equations, history basis snapshots,
/// active syzygies, definitions, and the generated-name counter. Sequentially
/// mutated by a single driver.
class System {
  public:
    explicit System(Registry reg) : reg_(std::move(reg)) {}

    Registry& registry() { return reg_; }
    const Registry& registry() const { return reg_; }

    /// Add an equation whose history is itself (a fresh history-basis member).
    LabelId add_basis_equation(FuncExpr value, const std::string& name_hint = "")
    {
        LabelId id{std::uint32_t(eqs_.size())};
        std::string name = name_hint.empty() ? "e" + std::to_string(id.value + 1) : name_hint;
        Equation eq{id, name, std::move(value), LabelExpr::symbol(id), EqStatus::active};
        basis_values_.push_back(eq.value);
        eqs_.push_back(std::move(eq));
        return id;
    }

    /// Add an equation derived by reduction machinery, carrying a combined
    /// history over existing basis labels.
    LabelId add_derived_equation(FuncExpr value, LabelExpr history)
    {
        LabelId id{std::uint32_t(eqs_.size())};
        Equation eq{id, "e" + std::to_string(id.value + 1), std::move(value), std::move(history),
                    EqStatus::active};
        basis_values_.push_back(FuncExpr{}); // not a basis label
        eqs_.push_back(std::move(eq));
        return id;
    }

    Equation& eq(LabelId id) { return eqs_.at(id.value); }
    const Equation& eq(LabelId id) const { return eqs_.at(id.value); }
    std::size_t num_equations() const { return eqs_.size(); }

    std::vector<LabelId> active() const
    {
        std::vector<LabelId> out;
        for (const auto& e : eqs_)
            if (e.status == EqStatus::active)
                out.push_back(e.id);
        return out;
    }

    /// Evaluate a label expression against the current values of the
    /// referenced equations. Throws if a referenced equation is deleted.
    FuncExpr eval_labels(const LabelExpr& le) const
    {
        FuncExpr out;
        for (const auto& [k, c] : le.terms()) {
            const Equation& e = eq(k.sym);
            if (e.status == EqStatus::deleted)
                throw std::runtime_error("reference to deleted equation " + e.name);
            out += derive_multi(reg_, e.value, k.idx).scaled(c);
        }
        return out;
    }

    /// Evaluate against the history-basis snapshots (deleted labels allowed).
    FuncExpr eval_basis(const LabelExpr& le) const
    {
        FuncExpr out;
        for (const auto& [k, c] : le.terms())
            out += derive_multi(reg_, basis_values_.at(k.sym.value), k.idx).scaled(c);
        return out;
    }

    /// The recorded equation a label stands for (empty for derived labels).
    const FuncExpr& basis_value(LabelId id) const { return basis_values_.at(id.value); }

    /// History invariant: the history, evaluated over the basis, reproduces
    /// the equation's value term for term.
    bool history_consistent(LabelId id) const
    {
        const Equation& e = eq(id);
        return eval_basis(e.history) == e.value;
    }

    bool syzygy_holds(const LabelExpr& s) const { return eval_basis(s).is_zero(); }

    // --- syzygy store ---

    const std::vector<Syzygy>& syzygies() const { return syz_; }
    std::vector<Syzygy>& syzygies() { return syz_; }

    /// Rewrite an identity so it only references living labels, using the
    /// solved forms recorded at deletion time. Fails when a deleted label has
    /// no solved form.
    std::optional<LabelExpr> normalize_against_deletions(LabelExpr expr) const
    {
        for (int guard = 0; guard < 256; ++guard) {
            std::optional<LabelId> dead;
            for (LabelId l : expr.symbols())
                if (eq(l).status == EqStatus::deleted) {
                    dead = l;
                    break;
                }
            if (!dead)
                return expr;
            const DeletionRecord* rec = nullptr;
            for (const auto& d : deletions_)
                if (d.label == *dead)
                    rec = &d;
            if (!rec)
                return std::nullopt;
            expr = substitute_symbol(reg_, expr, *dead, rec->solved_as);
        }
        return std::nullopt;
    }

    /// Store a syzygy unless zero, already present, or not expressible over
    /// the living labels.
    bool add_syzygy(LabelExpr expr)
    {
        auto live = normalize_against_deletions(std::move(expr));
        if (!live || live->is_zero())
            return false;
        expr = canonical_syzygy(*live);
        for (const auto& s : syz_)
            if (s.expr == expr)
                return false;
        syz_.push_back(Syzygy{std::move(expr)});
        return true;
    }

    void remove_syzygy(std::size_t index) { syz_.erase(syz_.begin() + index); }

    /// Substitute e_label = omega into every stored syzygy, dropping the ones
    /// that become zero.
    void substitute_label_in_syzygies(LabelId label, const LabelExpr& omega)
    {
        std::vector<Syzygy> keep;
        for (auto& s : syz_) {
            LabelExpr e = substitute_symbol(reg_, s.expr, label, omega);
            if (!e.is_zero())
                keep.push_back(Syzygy{canonical_syzygy(e)});
        }
        syz_ = std::move(keep);
    }

    /// Drop syzygies that reference the label at all.
    void drop_syzygies_mentioning(LabelId label)
    {
        std::erase_if(syz_, [&](const Syzygy& s) { return s.expr.mentions(label); });
    }

    // --- deletions and definitions ---

    void delete_equation(LabelId id, LabelExpr solved_as, LabelExpr from_syzygy)
    {
        eq(id).status = EqStatus::deleted;
        deletions_.push_back(DeletionRecord{id, std::move(solved_as), std::move(from_syzygy)});
    }

    /// Archive eq as the definition of sym and replace sym in every active
    /// equation. Histories of rewritten equations are re-based on themselves.
    void archive_definition(LabelId id, FuncId sym, FuncExpr rhs)
    {
        eq(id).status = EqStatus::definition;
        record_rename(sym, std::move(rhs), id);
    }

    /// Record sym = rhs and replace sym throughout the active system.
    void record_rename(FuncId sym, FuncExpr rhs, std::optional<LabelId> origin = std::nullopt)
    {
        defs_.push_back(Definition{sym, rhs});
        std::vector<LabelId> touched;
        if (origin)
            touched.push_back(*origin);
        for (auto& e : eqs_) {
            if (e.status != EqStatus::active || !e.value.mentions(sym))
                continue;
            e.value = substitute_symbol(reg_, e.value, sym, rhs);
            rebase_history(e.id);
            touched.push_back(e.id);
        }
        // syzygies over the old values are stale now
        std::erase_if(syz_, [&](const Syzygy& s) {
            for (LabelId t : touched)
                if (s.expr.mentions(t))
                    return true;
            return false;
        });
    }

    /// Rewrite one equation's value in place (conventional machinery);
    /// history restarts from the new value.
    void rewrite_equation(LabelId id, FuncExpr value)
    {
        Equation& e = eq(id);
        e.value = std::move(value);
        rebase_history(id);
        std::erase_if(syz_, [&](const Syzygy& s) { return s.expr.mentions(id); });
    }

    /// Replace value and history together after a reduction step; the history
    /// stays expressed over the original basis, and so does the meaning of
    /// the label inside stored syzygies, which therefore remain valid.
    void update_reduced(LabelId id, FuncExpr value, LabelExpr history)
    {
        Equation& e = eq(id);
        e.value = std::move(value);
        e.history = std::move(history);
    }

    const std::vector<Definition>& definitions() const { return defs_; }
    const std::vector<DeletionRecord>& deletions() const { return deletions_; }

    /// Substitute recorded definitions into an expression until none applies.
    FuncExpr resolve(FuncExpr e) const
    {
        bool changed = true;
        int guard = 0;
        while (changed) {
            if (++guard > 1000)
                throw std::logic_error("cyclic definitions");
            changed = false;
            for (const auto& d : defs_) {
                if (e.mentions(d.sym)) {
                    e = substitute_symbol(reg_, e, d.sym, d.rhs);
                    changed = true;
                }
            }
        }
        return e;
    }

  private:
    void rebase_history(LabelId id)
    {
        Equation& e = eq(id);
        e.history = LabelExpr::symbol(id);
        basis_values_.at(id.value) = e.value;
    }

    Registry reg_;
    std::vector<Equation> eqs_;
    std::vector<FuncExpr> basis_values_;
    std::vector<Syzygy> syz_;
    std::vector<Definition> defs_;
    std::vector<DeletionRecord> deletions_;
};

} // namespace syzint
