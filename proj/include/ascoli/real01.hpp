// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "ascoli/dyadic.hpp"
#include "ascoli/rational.hpp"

namespace ascoli {

/// A real number in [0,1] given by dyadic approximations at the rate 2^-k:
/// approx(k) is within 2^-k of the value, and any two answers are coherent,
/// |approx(k) - approx(k')| <= 2^-k + 2^-k'.
///
/// Rational-backed values additionally expose their exact value, which the
/// extraction and encoding layers use for zero-tolerance checks.
class Real01 {
public:
    using ApproxFn = std::function<Dyadic(unsigned long)>;

    static Real01 from_rational(const Rational& q) {
        if (q.sign() < 0 || q > Rational(1))
            throw std::invalid_argument("Real01: value outside [0,1]: " + q.str());
        Real01 x;
        x.exact_ = q;
        x.approx_ = [q](unsigned long k) { return Dyadic::round_rational(q, k); };
        return x;
    }

    static Real01 from_function(ApproxFn f) {
        Real01 x;
        x.approx_ = std::move(f);
        return x;
    }

    Dyadic approx(unsigned long k) const { return approx_(k); }

    bool has_exact() const { return exact_.has_value(); }
    const Rational& exact() const { return *exact_; }

    /// Rational enclosure [lo, hi] of the value at precision k, clamped to [0,1].
    std::pair<Rational, Rational> enclosure(unsigned long k) const {
        if (exact_) return {*exact_, *exact_};
        Rational d = approx_(k).to_rational();
        Rational eps = pow2(-static_cast<long>(k));
        return {max(Rational(0), d - eps), min(Rational(1), d + eps)};
    }

private:
    ApproxFn approx_;
    std::optional<Rational> exact_;
};

/// Dyadic within 2^-k of |x - y|.
inline Dyadic real_dist(const Real01& x, const Real01& y, unsigned long k) {
    if (x.has_exact() && y.has_exact())
        return Dyadic::round_rational((x.exact() - y.exact()).abs(), k);
    Dyadic dx = x.approx(k + 2), dy = y.approx(k + 2);
    // |  |dx-dy| - |x-y|  |  <=  2*2^-(k+2)  =  2^-(k+1)
    return (dx - dy).abs();
}

}  // namespace ascoli
