#pragma once

#include <gmpxx.h>

#include <string>

namespace syzint {

/// Exact rational scalar. All coefficient arithmetic is arbitrary precision.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1)
{
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

} // namespace syzint
