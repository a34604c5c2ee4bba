// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "ascoli/rational.hpp"

namespace ascoli {

/// Exact dyadic rational m / 2^e with natural exponent. Canonical form keeps
/// the mantissa odd whenever e > 0 (so 0 is (0,0) and integers carry e = 0).
class Dyadic {
public:
    Dyadic() : m_(0), e_(0) {}
    explicit Dyadic(Integer integer_value) : m_(std::move(integer_value)), e_(0) {}
    Dyadic(Integer mantissa, unsigned long exponent) : m_(std::move(mantissa)), e_(exponent) {
        normalize();
    }

    const Integer& mantissa() const { return m_; }
    unsigned long exponent() const { return e_; }

    /// Largest dyadic of exponent k that is <= q.
    static Dyadic floor_rational(const Rational& q, unsigned long k) {
        Integer t = q.num();
        mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), k);
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), t.get_mpz_t(), q.den().get_mpz_t());
        return Dyadic(fl, k);
    }

    /// Smallest dyadic of exponent k that is >= q.
    static Dyadic ceil_rational(const Rational& q, unsigned long k) {
        Integer t = q.num();
        mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), k);
        Integer cl;
        mpz_cdiv_q(cl.get_mpz_t(), t.get_mpz_t(), q.den().get_mpz_t());
        return Dyadic(cl, k);
    }

    /// Nearest dyadic of exponent k; ties round toward zero.
    static Dyadic round_rational(const Rational& q, unsigned long k) {
        Integer t = q.num();
        mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), k);
        Integer fl, rem;
        mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), q.den().get_mpz_t());
        Integer twice = rem * 2;
        int cmp = ::cmp(twice, q.den());
        Integer n = fl;
        if (cmp > 0) {
            n = fl + 1;
        } else if (cmp == 0) {
            // exact half: the candidate closer to zero
            n = (sgn(t) < 0) ? fl + 1 : fl;
        }
        return Dyadic(n, k);
    }

    Rational to_rational() const { return Rational(m_) * pow2(-static_cast<long>(e_)); }

    int sign() const { return sgn(m_); }
    Dyadic abs() const { return Dyadic(::abs(m_), e_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        auto [ma, mb, e] = align(a, b);
        return Dyadic(ma + mb, e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        auto [ma, mb, e] = align(a, b);
        return Dyadic(ma - mb, e);
    }
    Dyadic operator-() const { return Dyadic(-m_, e_); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.m_ == b.m_ && a.e_ == b.e_; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        auto [ma, mb, e] = align(a, b);
        (void)e;
        return ma < mb;
    }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    friend bool operator==(const Dyadic& a, const Rational& q) { return a.to_rational() == q; }
    friend bool operator<=(const Dyadic& a, const Rational& q) { return a.to_rational() <= q; }
    friend bool operator<(const Dyadic& a, const Rational& q) { return a.to_rational() < q; }

    /// Serialized form "m*2^-e".
    std::string str() const { return m_.get_str() + "*2^-" + std::to_string(e_); }

    friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

private:
    static std::tuple<Integer, Integer, unsigned long> align(const Dyadic& a, const Dyadic& b) {
        unsigned long e = a.e_ > b.e_ ? a.e_ : b.e_;
        Integer ma = a.m_, mb = b.m_;
        mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), e - a.e_);
        mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), e - b.e_);
        return {ma, mb, e};
    }

    void normalize() {
        if (m_ == 0) {
            e_ = 0;
            return;
        }
        while (e_ > 0 && mpz_even_p(m_.get_mpz_t())) {
            m_ >>= 1;
            --e_;
        }
    }

    Integer m_;
    unsigned long e_;
};

}  // namespace ascoli
