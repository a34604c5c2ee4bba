// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ascoli {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. All arithmetic in this library is exact; floating point is
/// not used anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p/q" or a bare integer "p".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Integer(s));
            return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    Rational abs() const { return from_mpq(::abs(v_)); }

    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    Integer ceil() const {
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Serialized form is always "p/q", including integers ("3/1").
    std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw std::invalid_argument("Rational: division by zero");
        return from_mpq(a.v_ / b.v_);
    }
    Rational operator-() const { return from_mpq(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);  // GMP arithmetic preserves canonical form
        return r;
    }
    mpq_class v_;
};

/// 2^e as an exact rational; e may be negative.
inline Rational pow2(long e) {
    Integer p = 1;
    if (e >= 0) {
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(p);
    }
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-e));
    return Rational(1, p);
}

/// 3^e as an exact rational; e may be negative.
inline Rational pow3(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(p) : Rational(1, p);
}

/// Smallest c >= 0 with s <= 2^c (s > 0). Used to turn slope bounds into
/// modulus offsets.
inline unsigned long ceil_log2(const Rational& s) {
    if (s.sign() <= 0) throw std::invalid_argument("ceil_log2: argument must be positive");
    unsigned long c = 0;
    while (pow2(static_cast<long>(c)) < s) ++c;
    return c;
}

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ascoli
