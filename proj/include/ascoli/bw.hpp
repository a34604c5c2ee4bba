// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ascoli/cantor.hpp"
#include "ascoli/encode.hpp"
#include "ascoli/errors.hpp"
#include "ascoli/rational.hpp"
#include "ascoli/real01.hpp"
#include "ascoli/subsequence.hpp"

namespace ascoli {

namespace detail {

/// n-th smallest index of each survivor set, for n = 0, 1, ...; stops as
/// soon as a level runs out of indices.
inline void materialize_selector(Subsequence& out, const std::vector<std::vector<std::size_t>>& survivor_sets) {
    for (std::size_t n = 0; n < survivor_sets.size(); ++n) {
        if (survivor_sets[n].size() <= n) {
            out.truncated = true;
            out.note = "selector prefix shortened at level " + std::to_string(n) + " (" +
                       std::to_string(survivor_sets[n].size()) + " survivors)";
            return;
        }
        out.g.push_back(survivor_sets[n][n]);
    }
}

/// Upper bound on |x - y| from enclosures; exact when both are exact.
inline Rational dist_upper(const Real01& x, const Real01& y, unsigned long prec) {
    if (x.has_exact() && y.has_exact()) return (x.exact() - y.exact()).abs();
    auto [xl, xh] = x.enclosure(prec);
    auto [yl, yh] = y.enclosure(prec);
    Rational d = max(xh - yl, yh - xl);
    return max(d, Rational(0));
}

/// Term provably inside the closed interval [lo, hi] at the given working
/// precision. Exact-backed terms decide by comparison (so an endpoint value
/// belongs to both adjacent halves); approximant-backed terms must fit their
/// whole enclosure inside.
inline bool provably_in(const Real01& x, const Rational& lo, const Rational& hi, unsigned long prec) {
    if (x.has_exact()) return lo <= x.exact() && x.exact() <= hi;
    auto [xl, xh] = x.enclosure(prec);
    return lo <= xl && xh <= hi;
}

}  // namespace detail

/// Bolzano-Weierstrass on [0,1] over a finite horizon: nested dyadic
/// bisection keeping the more populated half (ties to the left), selecting
/// the n-th surviving index at level n. Terms selected past level k lie in a
/// common interval of width 2^-k, which the returned certificate re-checks
/// with exact arithmetic.
inline Subsequence bw_unit(const std::function<Real01(std::size_t)>& seq, std::size_t horizon,
                           unsigned long k_max) {
    if (k_max > 40) throw std::invalid_argument("bw_unit: k_max out of range");
    if (horizon < (static_cast<std::size_t>(1) << k_max))
        throw HorizonInsufficient("bw_unit: horizon " + std::to_string(horizon) +
                                  " below 2^k_max witnesses");
    std::vector<Real01> terms;
    terms.reserve(horizon);
    for (std::size_t n = 0; n < horizon; ++n) terms.push_back(seq(n));

    const std::size_t levels = static_cast<std::size_t>(k_max) + 8;
    Subsequence out;
    out.kind = Subsequence::Kind::unit_interval;

    std::vector<std::vector<std::size_t>> survivor_sets;
    std::vector<std::size_t> cur(horizon);
    for (std::size_t n = 0; n < horizon; ++n) cur[n] = n;
    survivor_sets.push_back(cur);

    Rational lo(0), hi(1);
    for (std::size_t level = 0; level < levels; ++level) {
        unsigned long prec = static_cast<unsigned long>(level) + 4;
        Rational mid = (lo + hi) / Rational(2);
        std::vector<std::size_t> left, right;
        for (std::size_t n : cur) {
            if (detail::provably_in(terms[n], lo, mid, prec)) left.push_back(n);
            if (detail::provably_in(terms[n], mid, hi, prec)) right.push_back(n);
        }
        bool take_left = left.size() >= right.size();
        out.levels.push_back({level, {left.size(), right.size()}, take_left ? 0u : 1u,
                              take_left ? left.size() : right.size()});
        if (take_left) {
            hi = mid;
            cur = std::move(left);
        } else {
            lo = mid;
            cur = std::move(right);
        }
        survivor_sets.push_back(cur);
    }
    out.limit_lo = lo;
    out.limit_hi = hi;

    detail::materialize_selector(out, survivor_sets);
    if (out.g.size() < static_cast<std::size_t>(k_max) + 3)
        throw HorizonInsufficient("bw_unit: only " + std::to_string(out.g.size()) +
                                  " selections materialized; need k_max+3 = " +
                                  std::to_string(k_max + 3));

    for (unsigned long k = 0; k <= k_max; ++k) {
        Rational bound = pow2(-static_cast<long>(k));
        Rational margin(0);
        for (std::size_t a = k + 1; a < out.g.size(); ++a)
            for (std::size_t b = a + 1; b < out.g.size(); ++b) {
                Rational d = detail::dist_upper(terms[out.g[a]], terms[out.g[b]], k + 6);
                margin = max(margin, d);
            }
        if (!(margin <= bound))
            throw std::logic_error("bw_unit: certification failed at k=" + std::to_string(k));
        out.claimed_rate[k] = k;
        out.certified_margin[k] = margin;
    }
    return out;
}

namespace detail {

struct CantorDescent {
    std::vector<std::vector<std::size_t>> survivor_sets;
    BitString path;
    std::vector<LevelStat> levels;
};

/// Shared prefix-tree descent: at each level take the leftmost bit value
/// retaining at least half of the survivors (majority with ties to 0).
inline CantorDescent descend_prefix_tree(const std::vector<CantorPoint>& pts, std::size_t depth) {
    CantorDescent d;
    std::vector<std::size_t> cur(pts.size());
    for (std::size_t n = 0; n < pts.size(); ++n) cur[n] = n;
    d.survivor_sets.push_back(cur);
    for (std::size_t level = 0; level < depth; ++level) {
        std::vector<std::size_t> zeros, ones;
        for (std::size_t n : cur)
            (pts[n].bit(level) == 0 ? zeros : ones).push_back(n);
        std::size_t threshold = (cur.size() + 1) / 2;
        bool take_zero = zeros.size() >= threshold;
        d.levels.push_back({level, {zeros.size(), ones.size()}, take_zero ? 0u : 1u,
                            take_zero ? zeros.size() : ones.size()});
        d.path.push_back(take_zero ? '0' : '1');
        cur = take_zero ? std::move(zeros) : std::move(ones);
        d.survivor_sets.push_back(cur);
    }
    return d;
}

}  // namespace detail

/// Bolzano-Weierstrass on the Cantor space: leftmost majority descent of the
/// prefix tree of the first `horizon` points. Terms selected past level k
/// agree on their length-k prefix (checked exactly on the materialized
/// selections), i.e. they are 2^-(k-1)-close in the Cantor metric.
inline Subsequence bw_cantor(const std::function<CantorPoint(std::size_t)>& seq, std::size_t horizon,
                             std::size_t depth) {
    if (horizon == 0) throw std::invalid_argument("bw_cantor: horizon must be positive");
    std::vector<CantorPoint> pts;
    pts.reserve(horizon);
    for (std::size_t n = 0; n < horizon; ++n) pts.push_back(seq(n));

    auto descent = detail::descend_prefix_tree(pts, depth);
    Subsequence out;
    out.kind = Subsequence::Kind::cantor;
    out.levels = std::move(descent.levels);
    out.path = std::move(descent.path);
    detail::materialize_selector(out, descent.survivor_sets);

    for (unsigned long k = 0; k + 2 <= out.g.size(); ++k) {
        const BitString want = pts[out.g[k + 1]].prefix(k);
        for (std::size_t a = k + 1; a < out.g.size(); ++a)
            if (pts[out.g[a]].prefix(k) != want)
                throw std::logic_error("bw_cantor: certification failed at k=" + std::to_string(k));
        out.claimed_rate[k] = k;
    }
    return out;
}

namespace detail {

/// Smallest t with (t+2) * 2^-t <= 2^-(k+1); prefix agreement to the
/// complete pairing triangle T(t) then forces product-metric distance
/// below 2^-k with headroom for the certification tail bound.
inline std::size_t product_triangle_rows(unsigned long k) {
    std::size_t t = 1;
    while (Rational(static_cast<long>(t) + 2) * pow2(-static_cast<long>(t)) >
           pow2(-static_cast<long>(k + 1)))
        ++t;
    return t;
}

inline std::size_t triangle(std::size_t t) { return t * (t + 1) / 2; }

}  // namespace detail

/// Bolzano-Weierstrass on [0,1]^N, routed through the Cantor encoding: each
/// point is interleaved into 2^N via binary expansions, extracted there, and
/// the prefix-agreement depth converted back to a product-metric rate.
inline Subsequence bw_product(const std::function<ProductPoint(std::size_t)>& seq, std::size_t horizon,
                              unsigned long k_max,
                              unsigned long max_precision = default_precision_budget()) {
    if (k_max > 40) throw std::invalid_argument("bw_product: k_max out of range");
    if (horizon < (static_cast<std::size_t>(1) << k_max))
        throw HorizonInsufficient("bw_product: horizon below 2^k_max witnesses");

    std::vector<ProductPoint> raw;
    std::vector<CantorPoint> pts;
    raw.reserve(horizon);
    pts.reserve(horizon);
    for (std::size_t n = 0; n < horizon; ++n) {
        raw.push_back(seq(n));
        const ProductPoint& p = raw.back();
        pts.push_back(pair_cantor([p, max_precision](std::size_t i) {
            return bin_expand(p.coord(i), max_precision);
        }));
    }

    std::vector<std::size_t> m_of_k(k_max + 1);
    for (unsigned long k = 0; k <= k_max; ++k)
        m_of_k[k] = detail::triangle(detail::product_triangle_rows(k));
    std::size_t depth = m_of_k[k_max] + 2;

    auto descent = detail::descend_prefix_tree(pts, depth);
    Subsequence out;
    out.kind = Subsequence::Kind::product;
    out.levels = std::move(descent.levels);
    out.path = std::move(descent.path);
    detail::materialize_selector(out, descent.survivor_sets);
    if (out.g.size() < depth + 1)
        throw HorizonInsufficient("bw_product: need " + std::to_string(depth + 1) +
                                  " selections for k_max=" + std::to_string(k_max) + ", got " +
                                  std::to_string(out.g.size()));

    for (unsigned long k = 0; k <= k_max; ++k) {
        std::size_t t = detail::product_triangle_rows(k);
        std::size_t m = m_of_k[k];
        Rational bound = pow2(-static_cast<long>(k));
        Rational tail = pow2(-(static_cast<long>(t) - 1));
        Rational margin(0);
        for (std::size_t a = m + 1; a < out.g.size(); ++a)
            for (std::size_t b = a + 1; b < out.g.size(); ++b) {
                Rational partial(0);
                for (std::size_t i = 0; i < t; ++i) {
                    Rational di = detail::dist_upper(raw[out.g[a]].coord(i), raw[out.g[b]].coord(i),
                                                     static_cast<unsigned long>(t) + 4);
                    partial += pow2(-static_cast<long>(i)) * di;
                }
                margin = max(margin, partial + tail);
            }
        if (!(margin <= bound))
            throw std::logic_error("bw_product: certification failed at k=" + std::to_string(k));
        out.claimed_rate[k] = m;
        out.certified_margin[k] = margin;
    }
    return out;
}

/// Bolzano-Weierstrass on [0,1]^2: quadtree bisection, one selector along
/// which both component sequences converge at certified rates. Child order
/// is (A-left,B-left), (A-left,B-right), (A-right,B-left), (A-right,B-right)
/// with ties to the lowest index.
inline Subsequence bw_pair2(const std::function<Real01(std::size_t)>& seqA,
                            const std::function<Real01(std::size_t)>& seqB, std::size_t horizon,
                            unsigned long k_max) {
    if (k_max > 40) throw std::invalid_argument("bw_pair2: k_max out of range");
    if (horizon < (static_cast<std::size_t>(1) << k_max))
        throw HorizonInsufficient("bw_pair2: horizon below 2^k_max witnesses");
    std::vector<Real01> a, b;
    a.reserve(horizon);
    b.reserve(horizon);
    for (std::size_t n = 0; n < horizon; ++n) {
        a.push_back(seqA(n));
        b.push_back(seqB(n));
    }

    const std::size_t levels = static_cast<std::size_t>(k_max) + 8;
    Subsequence out;
    out.kind = Subsequence::Kind::pair2;

    std::vector<std::vector<std::size_t>> survivor_sets;
    std::vector<std::size_t> cur(horizon);
    for (std::size_t n = 0; n < horizon; ++n) cur[n] = n;
    survivor_sets.push_back(cur);

    Rational alo(0), ahi(1), blo(0), bhi(1);
    for (std::size_t level = 0; level < levels; ++level) {
        unsigned long prec = static_cast<unsigned long>(level) + 4;
        Rational amid = (alo + ahi) / Rational(2);
        Rational bmid = (blo + bhi) / Rational(2);
        std::vector<std::vector<std::size_t>> child(4);
        for (std::size_t n : cur) {
            bool al = detail::provably_in(a[n], alo, amid, prec);
            bool ar = detail::provably_in(a[n], amid, ahi, prec);
            bool bl = detail::provably_in(b[n], blo, bmid, prec);
            bool br = detail::provably_in(b[n], bmid, bhi, prec);
            if (al && bl) child[0].push_back(n);
            if (al && br) child[1].push_back(n);
            if (ar && bl) child[2].push_back(n);
            if (ar && br) child[3].push_back(n);
        }
        std::size_t best = 0;
        for (std::size_t c = 1; c < 4; ++c)
            if (child[c].size() > child[best].size()) best = c;
        out.levels.push_back({level,
                              {child[0].size(), child[1].size(), child[2].size(), child[3].size()},
                              best,
                              child[best].size()});
        if (best < 2) ahi = amid; else alo = amid;
        if (best % 2 == 0) bhi = bmid; else blo = bmid;
        cur = std::move(child[best]);
        survivor_sets.push_back(cur);
    }
    out.limit_lo = alo;
    out.limit_hi = ahi;
    out.limit_lo_b = blo;
    out.limit_hi_b = bhi;

    detail::materialize_selector(out, survivor_sets);
    if (out.g.size() < static_cast<std::size_t>(k_max) + 3)
        throw HorizonInsufficient("bw_pair2: only " + std::to_string(out.g.size()) +
                                  " selections materialized; need k_max+3 = " +
                                  std::to_string(k_max + 3));

    for (unsigned long k = 0; k <= k_max; ++k) {
        Rational bound = pow2(-static_cast<long>(k));
        Rational margin(0);
        for (std::size_t i = k + 1; i < out.g.size(); ++i)
            for (std::size_t j = i + 1; j < out.g.size(); ++j) {
                margin = max(margin, detail::dist_upper(a[out.g[i]], a[out.g[j]], k + 6));
                margin = max(margin, detail::dist_upper(b[out.g[i]], b[out.g[j]], k + 6));
            }
        if (!(margin <= bound))
            throw std::logic_error("bw_pair2: certification failed at k=" + std::to_string(k));
        out.claimed_rate[k] = k;
        out.certified_margin[k] = margin;
    }
    return out;
}

}  // namespace ascoli
