// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ascoli/rational.hpp"

namespace ascoli {

namespace detail {

// Fixed enumeration of Q ∩ [0,1]: q(0)=0, q(1)=1, then reduced fractions p/d
// for d = 2, 3, ... with numerators ascending. Grown on demand; guarded so
// concurrent lookups stay consistent.
struct RationalEnumeration {
    std::mutex mu;
    std::vector<Rational> by_index{Rational(0), Rational(1)};
    std::map<Rational, std::size_t> index_of{{Rational(0), 0}, {Rational(1), 1}};
    unsigned long next_den = 2;

    void grow_one_denominator() {
        for (unsigned long p = 1; p < next_den; ++p) {
            if (std::gcd(p, next_den) != 1) continue;
            Rational q(static_cast<long>(p), static_cast<long>(next_den));
            index_of.emplace(q, by_index.size());
            by_index.push_back(q);
        }
        ++next_den;
    }
};

inline RationalEnumeration& rat_table() {
    static RationalEnumeration t;
    return t;
}

}  // namespace detail

/// i-th rational of the fixed enumeration of Q ∩ [0,1].
inline Rational rat_enum(std::size_t i) {
    auto& t = detail::rat_table();
    std::lock_guard<std::mutex> lock(t.mu);
    while (t.by_index.size() <= i) t.grow_one_denominator();
    return t.by_index[i];
}

/// Inverse of rat_enum. Requires q in [0,1].
inline std::size_t rat_index(const Rational& q) {
    if (q.sign() < 0 || q > Rational(1))
        throw std::invalid_argument("rat_index: value outside [0,1]: " + q.str());
    auto& t = detail::rat_table();
    std::lock_guard<std::mutex> lock(t.mu);
    for (;;) {
        auto it = t.index_of.find(q);
        if (it != t.index_of.end()) return it->second;
        t.grow_one_denominator();
    }
}

}  // namespace ascoli
