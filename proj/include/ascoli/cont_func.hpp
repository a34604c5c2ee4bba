// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ascoli/dyadic.hpp"
#include "ascoli/errors.hpp"
#include "ascoli/grid.hpp"
#include "ascoli/modulus.hpp"
#include "ascoli/rational.hpp"
#include "ascoli/real01.hpp"

namespace ascoli {

/// Continuous function [0,1] -> [0,1] with a modulus of continuity.
/// eval_rat answers are coherent dyadic approximations of the value at a
/// rational point; exact evaluation is exposed when the backing supports it
/// (piecewise-linear and constant functions do), which the certification
/// layers use for zero-tolerance checks.
class ContFunc {
public:
    using EvalFn = std::function<Dyadic(const Rational&, unsigned long)>;
    using ExactFn = std::function<Rational(const Rational&)>;

    ContFunc(EvalFn eval, UniformModulus modulus)
        : eval_(std::move(eval)), modulus_(std::move(modulus)) {}

    ContFunc(ExactFn exact, UniformModulus modulus)
        : eval_([exact](const Rational& x, unsigned long k) {
              return Dyadic::round_rational(exact(x), k);
          }),
          exact_(std::move(exact)),
          modulus_(std::move(modulus)) {}

    static ContFunc constant(const Rational& c) {
        return ContFunc(ExactFn([c](const Rational&) { return c; }), UniformModulus::constant(0));
    }

    /// Constant function whose value is an arbitrary Real01.
    static ContFunc constant_real(const Real01& v) {
        if (v.has_exact()) return constant(v.exact());
        return ContFunc(EvalFn([v](const Rational&, unsigned long k) { return v.approx(k); }),
                        UniformModulus::constant(0));
    }

    Dyadic eval_rat(const Rational& x, unsigned long k) const { return eval_(x, k); }

    bool has_exact() const { return static_cast<bool>(exact_); }
    Rational exact_eval(const Rational& x) const {
        if (!exact_) throw std::logic_error("ContFunc: no exact evaluation backing");
        return exact_(x);
    }

    const UniformModulus& modulus() const { return modulus_; }

private:
    EvalFn eval_;
    ExactFn exact_;
    UniformModulus modulus_;
};

/// Piecewise-linear function given by breakpoints with strictly increasing
/// x covering 0 and 1 and values in [0,1]. Evaluation is exact linear
/// interpolation, so sup-distances between two of these are computable
/// exactly from the merged breakpoint set.
class PiecewiseLinear {
public:
    using Point = std::pair<Rational, Rational>;

    explicit PiecewiseLinear(std::vector<Point> pts) : pts_(std::move(pts)) {
        if (pts_.size() < 2) throw std::invalid_argument("PiecewiseLinear: need at least 2 breakpoints");
        if (pts_.front().first != Rational(0) || pts_.back().first != Rational(1))
            throw std::invalid_argument("PiecewiseLinear: breakpoints must cover 0 and 1");
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            const auto& [x, y] = pts_[i];
            if (y.sign() < 0 || y > Rational(1))
                throw std::invalid_argument("PiecewiseLinear: value outside [0,1] at x=" + x.str());
            if (i > 0 && !(pts_[i - 1].first < x))
                throw std::invalid_argument("PiecewiseLinear: x-values must be strictly increasing");
        }
    }

    const std::vector<Point>& breakpoints() const { return pts_; }

    Rational operator()(const Rational& x) const {
        if (x.sign() < 0 || x > Rational(1))
            throw std::invalid_argument("PiecewiseLinear: evaluation outside [0,1]");
        auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                                   [](const Rational& v, const Point& p) { return v < p.first; });
        if (it == pts_.begin()) return pts_.front().second;
        if (it == pts_.end()) return pts_.back().second;
        const Point& hi = *it;
        const Point& lo = *(it - 1);
        return lo.second + (x - lo.first) * (hi.second - lo.second) / (hi.first - lo.first);
    }

    Rational max_abs_slope() const {
        Rational s(0);
        for (std::size_t i = 1; i < pts_.size(); ++i) {
            Rational slope =
                (pts_[i].second - pts_[i - 1].second) / (pts_[i].first - pts_[i - 1].first);
            s = max(s, slope.abs());
        }
        return s;
    }

    /// phi'(l) = l + ceil(log2 slope-bound), valid since a slope-S function
    /// moves by less than S * 2^-phi' over any step shorter than 2^-phi'.
    UniformModulus lipschitz_modulus() const {
        Rational s = max_abs_slope();
        unsigned long c = (s <= Rational(1)) ? 0 : ceil_log2(s);
        return UniformModulus::offset(c);
    }

    ContFunc as_cont_func() const { return as_cont_func(lipschitz_modulus()); }
    ContFunc as_cont_func(UniformModulus modulus) const {
        PiecewiseLinear self = *this;
        return ContFunc(ContFunc::ExactFn([self](const Rational& x) { return self(x); }),
                        std::move(modulus));
    }

    /// Exact sup |f - g|: the difference is piecewise linear over the merged
    /// breakpoints, so its extreme absolute value sits at one of them.
    static Rational exact_sup_abs_diff(const PiecewiseLinear& f, const PiecewiseLinear& g) {
        Rational best(0);
        for (const auto& p : f.pts_) best = max(best, (f(p.first) - g(p.first)).abs());
        for (const auto& p : g.pts_) best = max(best, (f(p.first) - g(p.first)).abs());
        return best;
    }

private:
    std::vector<Point> pts_;
};

/// Indexed equicontinuous family. `at` must be defined for every n below the
/// extraction horizon; `size` marks finite families.
struct FuncSeq {
    enum class Flavor { uniform, pointwise };

    Flavor flavor = Flavor::uniform;
    std::function<ContFunc(std::size_t)> at;
    UniformModulus shared_modulus = UniformModulus::identity();       // uniform flavor
    std::optional<PointwiseModulus> pointwise_modulus;                // pointwise flavor
    std::optional<std::size_t> size;

    static FuncSeq uniform(std::function<ContFunc(std::size_t)> at, UniformModulus m,
                           std::optional<std::size_t> size = std::nullopt) {
        FuncSeq s;
        s.flavor = Flavor::uniform;
        s.at = std::move(at);
        s.shared_modulus = std::move(m);
        s.size = size;
        return s;
    }

    static FuncSeq pointwise(std::function<ContFunc(std::size_t)> at, PointwiseModulus m,
                             std::optional<std::size_t> size = std::nullopt) {
        FuncSeq s;
        s.flavor = Flavor::pointwise;
        s.at = std::move(at);
        s.pointwise_modulus = std::move(m);
        s.size = size;
        return s;
    }
};

/// f at a Real01 point to precision 2^-k: query the point one step finer
/// than the modulus radius for 2^-(k+1), evaluate at that rational.
inline Dyadic eval_at(const ContFunc& f, const Real01& x, unsigned long k) {
    unsigned long j = f.modulus()(k + 1) + 1;
    Rational q = x.approx(j).to_rational();
    q = min(max(q, Rational(0)), Rational(1));
    return f.eval_rat(q, k + 1);
}

struct SupBracket {
    Dyadic lower, upper;  // lower <= sup|f-g| <= upper, upper - lower <= 2^-k
};

/// Brackets sup_{x in [0,1]} |f - g| using the grid Y_j with j = phi'(k+2):
/// the grid max is a lower bound, and equicontinuity caps the overshoot of
/// any off-grid point at 2 * 2^-(k+2).
inline SupBracket sup_dist_grid(const ContFunc& f, const ContFunc& g,
                                const UniformModulus& phi_prime, unsigned long k) {
    unsigned long j = phi_prime(k + 2);
    const Rational slack = pow2(-static_cast<long>(k + 1));  // 2 * 2^-(k+2)
    bool exact = f.has_exact() && g.has_exact();
    Rational m(0);
    for (const Rational& y : grid_Y(j)) {
        Rational d = exact ? (f.exact_eval(y) - g.exact_eval(y)).abs()
                           : (f.eval_rat(y, k + 4) - g.eval_rat(y, k + 4)).abs().to_rational();
        m = max(m, d);
    }
    if (exact) {
        return {Dyadic::floor_rational(m, k + 3), Dyadic::ceil_rational(m + slack, k + 3)};
    }
    Rational err = pow2(-static_cast<long>(k + 3));  // two evals at k+4
    return {Dyadic::floor_rational(max(Rational(0), m - err), k + 5),
            Dyadic::ceil_rational(m + err + slack, k + 5)};
}

/// Uniformization of a pointwise modulus at level l: brackets
/// max_x phi(x, l) by grid refinement driven by phi's own continuity
/// certificate, returning the ceiling once both bracket ends agree on it.
/// If the maximum sits exactly on an integer the ceiling never resolves from
/// above; after `refine_limit` rounds the exact grid maximum decides.
/// Throws CertificateViolation if adjacent grid values contradict the
/// certificate.
inline unsigned long uniformize_modulus(const PointwiseModulus& phi, unsigned long l,
                                        unsigned long refine_limit = 12) {
    Rational lo(0);
    for (unsigned long lvl = 1; lvl <= refine_limit; ++lvl) {
        unsigned long spacing_exp = phi.continuity()(lvl) + 1;
        Rational tol = pow2(-static_cast<long>(lvl));
        std::vector<Rational> grid = grid_Y(spacing_exp - 1);  // spacing 2^-spacing_exp
        lo = Rational(0);
        Rational prev;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Rational v = phi.eval(grid[i], l);
            if (i > 0 && !((v - prev).abs() < tol))
                throw CertificateViolation("uniformize_modulus: continuity certificate violated near x=" +
                                           grid[i].str());
            lo = max(lo, v);
            prev = v;
        }
        Rational hi = lo + tol;
        if (lo.ceil() == hi.ceil()) return static_cast<unsigned long>(lo.ceil().get_ui());
    }
    return static_cast<unsigned long>(lo.ceil().get_ui());
}

struct SamplePair {
    Rational x, y;
    unsigned long l = 0;
};

struct ModulusViolation {
    Rational x, y;
    unsigned long l = 0;
    std::size_t n = 0;
    Rational dist;  // exact |f_n(x) - f_n(y)|, or a certified lower bound
    bool proven = true;
};

struct ModulusReport {
    std::size_t checked = 0;
    std::vector<ModulusViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Spot-checks the family's modulus on sampled pairs: whenever the pair is
/// within the modulus radius (integer index by ceiling for pointwise
/// moduli), |f_n(x) - f_n(y)| < 2^-l must hold. Exact-backed members are
/// checked exactly; otherwise interval bounds are escalated until they
/// decide, and an undecided pair at maximum precision is reported as an
/// unproven violation rather than silently passed.
inline ModulusReport check_modulus(const FuncSeq& seq, const std::vector<SamplePair>& samples,
                                   const std::vector<std::size_t>& members) {
    ModulusReport report;
    for (const SamplePair& s : samples) {
        unsigned long radius_exp =
            seq.flavor == FuncSeq::Flavor::uniform
                ? seq.shared_modulus(s.l)
                : seq.pointwise_modulus->eval_ceil(s.x, s.l);
        if (!((s.x - s.y).abs() < pow2(-static_cast<long>(radius_exp)))) continue;
        Rational bound = pow2(-static_cast<long>(s.l));
        for (std::size_t n : members) {
            ContFunc f = seq.at(n);
            ++report.checked;
            if (f.has_exact()) {
                Rational d = (f.exact_eval(s.x) - f.exact_eval(s.y)).abs();
                if (!(d < bound)) report.violations.push_back({s.x, s.y, s.l, n, d, true});
                continue;
            }
            bool decided = false;
            for (unsigned long p = s.l + 2; p <= s.l + 40; p += 4) {
                Rational d = (f.eval_rat(s.x, p) - f.eval_rat(s.y, p)).abs().to_rational();
                Rational eps = pow2(-static_cast<long>(p - 1));
                if (d + eps < bound) { decided = true; break; }
                if (d - eps >= bound) {
                    report.violations.push_back({s.x, s.y, s.l, n, d - eps, true});
                    decided = true;
                    break;
                }
            }
            if (!decided) report.violations.push_back({s.x, s.y, s.l, n, Rational(0), false});
        }
    }
    return report;
}

}  // namespace ascoli
