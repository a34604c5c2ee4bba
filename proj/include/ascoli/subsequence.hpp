// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ascoli/cantor.hpp"
#include "ascoli/rational.hpp"

namespace ascoli {

/// Per-level record of one extraction step: how many survivors each child
/// (half / quadrant / bit value) held and which one was taken.
struct LevelStat {
    std::size_t level = 0;
    std::vector<std::size_t> child_counts;
    std::size_t chosen = 0;
    std::size_t survivors = 0;
};

/// A strictly increasing selector g with a claimed convergence rate,
/// materialized to a finite prefix and certified on it by exact checks.
struct Subsequence {
    enum class Kind { unit_interval, cantor, product, pair2 };

    Kind kind = Kind::unit_interval;
    std::vector<std::size_t> g;

    /// claimed_rate[k] = m(k): all materialized terms with indices n,n' > m(k)
    /// are pairwise 2^-k-close (unit/pair2/product metric) or agree on a
    /// length-k prefix (cantor).
    std::map<unsigned long, std::size_t> claimed_rate;

    /// Largest exact pairwise margin observed while certifying rate k.
    std::map<unsigned long, Rational> certified_margin;

    std::vector<LevelStat> levels;

    /// Final bisection interval(s) — set for unit_interval and pair2 kinds.
    Rational limit_lo, limit_hi;
    Rational limit_lo_b, limit_hi_b;

    /// Chosen bit path — set for cantor kind.
    BitString path;

    bool truncated = false;
    std::string note;
};

}  // namespace ascoli
