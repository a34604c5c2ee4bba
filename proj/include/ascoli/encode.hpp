// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "ascoli/cantor.hpp"
#include "ascoli/cont_func.hpp"
#include "ascoli/enumeration.hpp"
#include "ascoli/errors.hpp"
#include "ascoli/real01.hpp"

namespace ascoli {

/// Bit-precision cap for digit queries answered from approximations only.
/// Overridable through ASCOLI_MAX_PRECISION.
inline unsigned long default_precision_budget() {
    static unsigned long budget = [] {
        if (const char* env = std::getenv("ASCOLI_MAX_PRECISION")) {
            unsigned long v = std::strtoul(env, nullptr, 10);
            if (v > 0) return v;
        }
        return 4096ul;
    }();
    return budget;
}

/// A point of [0,1]^N: coordinate i is a Real01, queryable to any precision.
class ProductPoint {
public:
    explicit ProductPoint(std::function<Real01(std::size_t)> coord) : coord_(std::move(coord)) {}

    static ProductPoint constant(const Real01& v) {
        return ProductPoint([v](std::size_t) { return v; });
    }

    Real01 coord(std::size_t i) const { return coord_(i); }
    Dyadic coord_approx(std::size_t i, unsigned long k) const { return coord_(i).approx(k); }

private:
    std::function<Real01(std::size_t)> coord_;
};

/// F: f |-> (f(q(i)))_i, the pointwise data of f on the rational enumeration.
inline ProductPoint embed_F(const ContFunc& f) {
    if (f.has_exact()) {
        return ProductPoint([f](std::size_t i) { return Real01::from_rational(f.exact_eval(rat_enum(i))); });
    }
    return ProductPoint([f](std::size_t i) {
        Rational q = rat_enum(i);
        return Real01::from_function([f, q](unsigned long k) { return f.eval_rat(q, k); });
    });
}

/// Product metric d(x,y) = sum_i 2^-i |x_i - y_i| to within 2^-k: the first
/// k+2 coordinates at precision k+4 leave a geometric tail below 2^-(k+1)
/// and an accumulation error below 2^-(k+2).
inline Dyadic prod_metric(const ProductPoint& x, const ProductPoint& y, unsigned long k) {
    std::size_t terms = static_cast<std::size_t>(k) + 2;
    Dyadic sum;
    for (std::size_t i = 0; i < terms; ++i) {
        Dyadic di = (x.coord_approx(i, k + 4) - y.coord_approx(i, k + 4)).abs();
        sum = sum + Dyadic(di.mantissa(), di.exponent() + i);  // di * 2^-i
    }
    return sum;
}

namespace detail {

/// Binary digit i of an exact rational in [0,1]. The expansion of a dyadic
/// is the terminating one (trailing zeros); 1 itself expands to all ones.
inline int rational_bit(const Rational& q, std::size_t i) {
    if (q == Rational(1)) return 1;
    Integer t = q.num();
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), i + 1);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_mpz_t(), q.den().get_mpz_t());
    return mpz_odd_p(fl.get_mpz_t()) ? 1 : 0;
}

}  // namespace detail

/// Binary expansion of a Real01 as a Cantor point. Rational-backed reals are
/// expanded exactly; otherwise each digit is decided from enclosures at
/// escalating precision and a digit that never resolves (the value sits on a
/// dyadic boundary) exhausts the budget.
inline CantorPoint bin_expand(const Real01& x, unsigned long max_precision = default_precision_budget()) {
    if (x.has_exact()) {
        Rational q = x.exact();
        return CantorPoint([q](std::size_t i) { return detail::rational_bit(q, i); });
    }
    return CantorPoint([x, max_precision](std::size_t i) {
        for (unsigned long p = static_cast<unsigned long>(i) + 4; p <= max_precision; p += 8) {
            auto [lo, hi] = x.enclosure(p);
            Integer nlo = (lo * pow2(static_cast<long>(i) + 1)).floor();
            Integer nhi = (hi * pow2(static_cast<long>(i) + 1)).floor();
            if (nlo == nhi && hi < Rational(1)) return mpz_odd_p(nlo.get_mpz_t()) ? 1 : 0;
            if (lo == Rational(1)) return 1;
        }
        throw PrecisionBudgetExceeded("bin_expand: digit " + std::to_string(i) +
                                      " undecided within precision budget");
    });
}

/// Interleaves a sequence of Cantor points into one: output bit <i,k> is bit
/// k of element i. A prefix of length L therefore touches exactly the bit
/// pairs with <i,k> < L.
inline CantorPoint pair_cantor(std::function<CantorPoint(std::size_t)> elems) {
    struct Cache {
        std::function<CantorPoint(std::size_t)> elems;
        std::mutex mu;
        std::map<std::size_t, CantorPoint> points;
        CantorPoint get(std::size_t i) {
            std::lock_guard<std::mutex> lock(mu);
            auto it = points.find(i);
            if (it == points.end()) it = points.emplace(i, elems(i)).first;
            return it->second;
        }
    };
    auto cache = std::make_shared<Cache>();
    cache->elems = std::move(elems);
    return CantorPoint([cache](std::size_t n) {
        auto [i, k] = pair_split(n);
        return cache->get(static_cast<std::size_t>(i)).bit(static_cast<std::size_t>(k));
    });
}

/// F' = pairing of the binary expansions of F's coordinates: converges in
/// 2^N exactly when the functions converge uniformly.
inline CantorPoint embed_Fprime(const ContFunc& f,
                                unsigned long max_precision = default_precision_budget()) {
    ProductPoint p = embed_F(f);
    return pair_cantor([p, max_precision](std::size_t i) { return bin_expand(p.coord(i), max_precision); });
}

}  // namespace ascoli
