#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "syzint/registry.hpp"

namespace syzint {

/// Sparse exponent vector, sorted by variable id, zero entries omitted.
/// Serves both as polynomial monomial and as derivative multi-index.
class ExpVec {
  public:
    using Entry = std::pair<VarId, std::uint32_t>;

    ExpVec() = default;

    static ExpVec single(VarId v, std::uint32_t k = 1)
    {
        ExpVec m;
        if (k > 0)
            m.e_.push_back({v, k});
        return m;
    }

    std::uint32_t order(VarId v) const
    {
        for (const auto& [w, k] : e_)
            if (w == v)
                return k;
        return 0;
    }

    std::uint32_t total() const
    {
        std::uint32_t t = 0;
        for (const auto& [w, k] : e_)
            t += k;
        return t;
    }

    bool empty() const { return e_.empty(); }

    ExpVec plus(VarId v, std::uint32_t k = 1) const
    {
        ExpVec out = *this;
        for (auto& [w, kk] : out.e_)
            if (w == v) {
                kk += k;
                return out;
            }
        out.e_.push_back({v, k});
        std::sort(out.e_.begin(), out.e_.end());
        return out;
    }

    ExpVec minus_one(VarId v) const
    {
        ExpVec out;
        bool seen = false;
        for (const auto& [w, k] : e_) {
            if (w == v) {
                seen = true;
                if (k > 1)
                    out.e_.push_back({w, k - 1});
            } else {
                out.e_.push_back({w, k});
            }
        }
        assert(seen);
        (void)seen;
        return out;
    }

    ExpVec plus(const ExpVec& o) const { return merge(o, /*subtract=*/false); }

    /// Componentwise >=.
    bool contains(const ExpVec& o) const
    {
        for (const auto& [w, k] : o.e_)
            if (order(w) < k)
                return false;
        return true;
    }

    ExpVec minus(const ExpVec& o) const
    {
        assert(contains(o));
        return merge(o, /*subtract=*/true);
    }

    static ExpVec lcm(const ExpVec& a, const ExpVec& b)
    {
        ExpVec out = a;
        for (const auto& [w, k] : b.e_) {
            std::uint32_t ka = a.order(w);
            if (k > ka)
                out = out.plus(w, k - ka);
        }
        return out;
    }

    VarSet vars() const
    {
        VarSet s;
        for (const auto& [w, k] : e_)
            s.add(w);
        return s;
    }

    const std::vector<Entry>& entries() const { return e_; }

    bool operator==(const ExpVec&) const = default;

    /// Graded reverse-lexicographic comparison over a variable precedence
    /// list (earlier entries are more significant). Returns -1/0/+1 with +1
    /// meaning `a` ranks above `b`.
    static int cmp_grevlex(const ExpVec& a, const ExpVec& b, const std::vector<VarId>& prec)
    {
        std::uint32_t ta = a.total(), tb = b.total();
        if (ta != tb)
            return ta < tb ? -1 : 1;
        for (auto it = prec.rbegin(); it != prec.rend(); ++it) {
            std::uint32_t ka = a.order(*it), kb = b.order(*it);
            if (ka != kb)
                return ka > kb ? -1 : 1; // smaller trailing exponent ranks higher
        }
        return 0;
    }

    /// Pure lexicographic comparison over a precedence list.
    static int cmp_lex(const ExpVec& a, const ExpVec& b, const std::vector<VarId>& prec)
    {
        for (VarId v : prec) {
            std::uint32_t ka = a.order(v), kb = b.order(v);
            if (ka != kb)
                return ka < kb ? -1 : 1;
        }
        return 0;
    }

    /// Canonical storage order: grevlex with registry-id precedence.
    bool operator<(const ExpVec& o) const
    {
        std::uint32_t ta = total(), tb = o.total();
        if (ta != tb)
            return ta < tb;
        // reverse scan over ids present in either
        std::size_t i = e_.size(), j = o.e_.size();
        while (i > 0 && j > 0) {
            const Entry& ea = e_[i - 1];
            const Entry& eb = o.e_[j - 1];
            if (ea.first != eb.first) {
                // the one holding the larger trailing variable has a nonzero
                // exponent where the other has zero
                return ea.first > eb.first;
            }
            if (ea.second != eb.second)
                return ea.second > eb.second;
            --i;
            --j;
        }
        return i > j; // leftover high entries make it smaller
    }

  private:
    ExpVec merge(const ExpVec& o, bool subtract) const
    {
        ExpVec out;
        std::size_t i = 0, j = 0;
        while (i < e_.size() || j < o.e_.size()) {
            if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
                out.e_.push_back(e_[i++]);
            } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
                assert(!subtract);
                out.e_.push_back(o.e_[j++]);
            } else {
                std::int64_t k = subtract ? std::int64_t(e_[i].second) - o.e_[j].second
                                          : std::int64_t(e_[i].second) + o.e_[j].second;
                assert(k >= 0);
                if (k > 0)
                    out.e_.push_back({e_[i].first, std::uint32_t(k)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::vector<Entry> e_;
};

using MultiIndex = ExpVec;
using Monomial = ExpVec;

} // namespace syzint
