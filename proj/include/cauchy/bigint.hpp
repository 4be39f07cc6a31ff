#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cauchy/errors.hpp"

namespace cauchy {

// Arbitrary-precision signed integer, little-endian base 2^32 magnitude.
// Covers exactly what the identity checks need: add, sub, mul, small
// division, shifts and binary gcd; no general long division.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {  // NOLINT: implicit by design, mirrors int semantics
        if (v < 0) {
            sign_ = -1;
            store_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
        } else if (v > 0) {
            sign_ = 1;
            store_u64(static_cast<std::uint64_t>(v));
        }
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            const BigInt& big = c > 0 ? a : b;
            const BigInt& small = c > 0 ? b : a;
            r.mag_ = sub_mag(big.mag_, small.mag_);
            r.sign_ = big.sign_;
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Division by a machine word; returns the remainder. Magnitude only:
    // callers divide nonnegative values.
    std::uint32_t div_small(std::uint32_t d) {
        CAUCHY_CHECK_MSG(d != 0, "division by zero");
        CAUCHY_CHECK_MSG(sign_ >= 0, "div_small on negative value");
        std::uint64_t rem = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag_[i];
            mag_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        if (mag_.empty()) sign_ = 0;
        return static_cast<std::uint32_t>(rem);
    }

    BigInt half() const {  // floor(|x|/2) with sign kept, used by gcd
        BigInt r = *this;
        std::uint32_t carry = 0;
        for (std::size_t i = r.mag_.size(); i-- > 0;) {
            std::uint32_t next = r.mag_[i] & 1u;
            r.mag_[i] = (r.mag_[i] >> 1) | (carry << 31);
            carry = next;
        }
        r.trim();
        if (r.mag_.empty()) r.sign_ = 0;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {  // binary gcd on magnitudes
        a = a.abs();
        b = b.abs();
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int shift = 0;
        while (a.is_even() && b.is_even()) {
            a = a.half();
            b = b.half();
            ++shift;
        }
        while (a.is_even()) a = a.half();
        while (!b.is_zero()) {
            while (b.is_even()) b = b.half();
            if (a > b) std::swap(a, b);
            b = b - a;
        }
        for (int i = 0; i < shift; ++i) a = a + a;
        return a;
    }

    static BigInt pow(BigInt base, unsigned long long e) {
        BigInt r = 1;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    static BigInt factorial(unsigned n) {
        BigInt r = 1;
        for (unsigned i = 2; i <= n; ++i) r *= BigInt(static_cast<long long>(i));
        return r;
    }

    // Multiplicative formula; every intermediate division is exact.
    static BigInt binomial(long long n, long long k) {
        if (k < 0 || k > n) return BigInt();
        if (k > n - k) k = n - k;
        BigInt r = 1;
        for (long long i = 1; i <= k; ++i) {
            r *= BigInt(n - k + i);
            std::uint32_t rem = r.div_small(static_cast<std::uint32_t>(i));
            CAUCHY_CHECK(rem == 0);
        }
        return r;
    }

    // C(a_1+...+a_r; a_1,...,a_r)
    static BigInt multinomial(const std::vector<long long>& parts) {
        BigInt r = 1;
        long long total = 0;
        for (long long p : parts) {
            CAUCHY_CHECK(p >= 0);
            total += p;
            r *= binomial(total, p);
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigInt tmp = abs();
        std::string digits;
        while (!tmp.is_zero()) {
            std::uint32_t chunk = tmp.div_small(1000000000u);
            std::string part = std::to_string(chunk);
            if (!tmp.is_zero()) part = std::string(9 - part.size(), '0') + part;
            digits = part + digits;
        }
        return (sign_ < 0 ? "-" : "") + digits;
    }

    long long to_long_long() const {
        CAUCHY_CHECK_MSG(mag_.size() <= 2, "value does not fit in long long");
        std::uint64_t v = 0;
        if (mag_.size() >= 1) v = mag_[0];
        if (mag_.size() == 2) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
        CAUCHY_CHECK(v <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max()));
        return sign_ < 0 ? -static_cast<long long>(v) : static_cast<long long>(v);
    }

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // no trailing zero limbs

    void store_u64(std::uint64_t v) {
        mag_.clear();
        while (v) {
            mag_.push_back(static_cast<std::uint32_t>(v));
            v >>= 32;
        }
    }
    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    }
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(std::max(a.size(), b.size()) + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = 0;
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        CAUCHY_CHECK(borrow == 0);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace cauchy
