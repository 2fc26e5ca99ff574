#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace syzint {

struct VarId {
    std::uint32_t value = 0;
    auto operator<=>(const VarId&) const = default;
};

struct FuncId {
    std::uint32_t value = 0;
    auto operator<=>(const FuncId&) const = default;
};

struct LabelId {
    std::uint32_t value = 0;
    auto operator<=>(const LabelId&) const = default;
};

/// Packed set of independent variables. A session never holds more than 64.
class VarSet {
  public:
    VarSet() = default;

    static VarSet all(std::size_t n)
    {
        VarSet s;
        s.bits_ = (n >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
        return s;
    }

    void add(VarId v) { bits_ |= bit(v); }
    void remove(VarId v) { bits_ &= ~bit(v); }
    bool contains(VarId v) const { return (bits_ & bit(v)) != 0; }
    bool subset_of(VarSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }

    VarSet united(VarSet o) const
    {
        VarSet s;
        s.bits_ = bits_ | o.bits_;
        return s;
    }
    VarSet minus(VarSet o) const
    {
        VarSet s;
        s.bits_ = bits_ & ~o.bits_;
        return s;
    }

    std::vector<VarId> to_vector() const
    {
        std::vector<VarId> out;
        for (std::uint32_t i = 0; i < 64; ++i)
            if (bits_ & (std::uint64_t(1) << i))
                out.push_back(VarId{i});
        return out;
    }

    bool operator==(const VarSet&) const = default;

  private:
    static std::uint64_t bit(VarId v) { return std::uint64_t(1) << v.value; }
    std::uint64_t bits_ = 0;
};

enum class FuncOrigin { original, integration, divint_auxiliary };

struct Variable {
    std::string name;
};

struct FuncSymbol {
    std::string name;
    VarSet deps;
    FuncOrigin origin = FuncOrigin::original;
};

/// Session registry of independent variables and unknown functions.
/// Mutation is confined to a single driver thread; expressions hold ids only.
class Registry {
  public:
    VarId add_variable(const std::string& name)
    {
        if (find_variable(name))
            throw std::runtime_error("duplicate variable name: " + name);
        if (vars_.size() >= 64)
            throw std::runtime_error("too many variables");
        vars_.push_back(Variable{name});
        return VarId{std::uint32_t(vars_.size() - 1)};
    }

    FuncId add_function(const std::string& name, VarSet deps, FuncOrigin origin = FuncOrigin::original)
    {
        if (find_function(name) || find_variable(name))
            throw std::runtime_error("duplicate symbol name: " + name);
        funcs_.push_back(FuncSymbol{name, deps, origin});
        return FuncId{std::uint32_t(funcs_.size() - 1)};
    }

    /// Next function of integration: c1, c2, ... (shared counter, taken names skipped).
    FuncId fresh_function(VarSet deps, FuncOrigin origin = FuncOrigin::integration)
    {
        std::string name;
        do {
            name = "c" + std::to_string(++counter_);
        } while (find_function(name) || find_variable(name));
        return add_function(name, deps, origin);
    }

    std::optional<VarId> find_variable(const std::string& name) const
    {
        for (std::uint32_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name)
                return VarId{i};
        return std::nullopt;
    }

    std::optional<FuncId> find_function(const std::string& name) const
    {
        for (std::uint32_t i = 0; i < funcs_.size(); ++i)
            if (funcs_[i].name == name)
                return FuncId{i};
        return std::nullopt;
    }

    const Variable& var(VarId v) const { return vars_.at(v.value); }
    const FuncSymbol& func(FuncId f) const { return funcs_.at(f.value); }

    std::size_t num_variables() const { return vars_.size(); }
    std::size_t num_functions() const { return funcs_.size(); }

    VarSet all_vars() const { return VarSet::all(vars_.size()); }

    std::vector<VarId> var_order() const
    {
        std::vector<VarId> out;
        for (std::uint32_t i = 0; i < vars_.size(); ++i)
            out.push_back(VarId{i});
        return out;
    }

    /// Rollback point for speculative work (abandoned integrations).
    struct Mark {
        std::size_t nfuncs;
        int counter;
    };
    Mark mark() const { return Mark{funcs_.size(), counter_}; }
    void rollback(Mark m)
    {
        funcs_.resize(m.nfuncs);
        counter_ = m.counter;
    }

  private:
    std::vector<Variable> vars_;
    std::vector<FuncSymbol> funcs_;
    int counter_ = 0;
};

} // namespace syzint
