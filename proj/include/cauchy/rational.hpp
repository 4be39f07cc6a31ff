#pragma once

#include <string>
#include <utility>

#include "cauchy/bigint.hpp"

namespace cauchy {

// Exact rational over BigInt; denominator kept positive, value normalized.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        CAUCHY_CHECK_MSG(!den_.is_zero(), "zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        CAUCHY_CHECK_MSG(!b.num_.is_zero(), "division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    std::string to_string() const {
        if (den_ == BigInt(1)) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }

    // a/g for g dividing a, by binary long division.
    static BigInt divide_exact(const BigInt& a, const BigInt& g) {
        if (g == BigInt(1)) return a;
        bool neg = a.is_negative();
        BigInt rem = a.abs();
        BigInt q = 0;
        // binary long division: find highest shift of g <= rem
        std::vector<BigInt> shifted{g.abs()};
        std::vector<BigInt> powers{BigInt(1)};
        while (shifted.back() + shifted.back() <= rem) {
            shifted.push_back(shifted.back() + shifted.back());
            powers.push_back(powers.back() + powers.back());
        }
        for (std::size_t i = shifted.size(); i-- > 0;) {
            if (shifted[i] <= rem) {
                rem = rem - shifted[i];
                q += powers[i];
            }
        }
        CAUCHY_CHECK_MSG(rem.is_zero(), "inexact division");
        return neg ? -q : q;
    }
};

inline std::string to_string(const Rational& v) { return v.to_string(); }

}  // namespace cauchy
