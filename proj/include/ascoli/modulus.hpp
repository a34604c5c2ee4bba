// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

#include "ascoli/rational.hpp"

namespace ascoli {

/// Modulus of uniform (equi)continuity: phi'(l) is a precision index such
/// that |x-y| < 2^-phi'(l) forces |f(x)-f(y)| < 2^-l for every member of the
/// family. Monotonicity in l is enforced by taking running maxima, so any
/// raw map is admissible.
class UniformModulus {
public:
    using Fn = std::function<unsigned long(unsigned long)>;

    explicit UniformModulus(Fn raw) : raw_(std::move(raw)) {}

    static UniformModulus constant(unsigned long c) {
        return UniformModulus([c](unsigned long) { return c; });
    }
    static UniformModulus identity() {
        return UniformModulus([](unsigned long l) { return l; });
    }
    /// phi'(l) = l + c, the modulus of a family with slope bound 2^c.
    static UniformModulus offset(unsigned long c) {
        return UniformModulus([c](unsigned long l) { return l + c; });
    }

    unsigned long operator()(unsigned long l) const {
        unsigned long m = raw_(0);
        for (unsigned long j = 1; j <= l; ++j) {
            unsigned long v = raw_(j);
            if (v > m) m = v;
        }
        return m;
    }

private:
    Fn raw_;
};

/// Pointwise modulus of equicontinuity phi(x, l): real-valued (integer
/// precision indices are obtained by ceiling at use sites) and continuous in
/// x, with its own modulus of continuity in x as the certificate that makes
/// its maximum over [0,1] computable by grid refinement.
class PointwiseModulus {
public:
    using Fn = std::function<Rational(const Rational&, unsigned long)>;

    PointwiseModulus(Fn phi, UniformModulus continuity_in_x)
        : phi_(std::move(phi)), continuity_(std::move(continuity_in_x)) {}

    /// An x-independent modulus viewed pointwise.
    static PointwiseModulus from_uniform(const UniformModulus& m) {
        return PointwiseModulus(
            [m](const Rational&, unsigned long l) { return Rational(Integer(static_cast<long>(m(l)))); },
            UniformModulus::identity());
    }

    Rational eval(const Rational& x, unsigned long l) const {
        Rational m = checked(x, 0);
        for (unsigned long j = 1; j <= l; ++j) m = max(m, checked(x, j));
        return m;
    }

    unsigned long eval_ceil(const Rational& x, unsigned long l) const {
        Integer c = eval(x, l).ceil();
        if (c < 0) return 0;
        return static_cast<unsigned long>(c.get_ui());
    }

    const UniformModulus& continuity() const { return continuity_; }

private:
    Rational checked(const Rational& x, unsigned long l) const {
        Rational v = phi_(x, l);
        if (v.sign() < 0)
            throw std::invalid_argument("PointwiseModulus: negative value at " + x.str());
        return v;
    }

    Fn phi_;
    UniformModulus continuity_;
};

}  // namespace ascoli
