#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>

#include "padicts/errors.hpp"

namespace padicts {

/// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
/// intermediates. All values arising here come from terminating base-p
/// expansions over small windows, so the range is ample.
class Rational {
public:
    constexpr Rational() = default;

    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw invalid_parameter("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational operator-() const { return make_raw(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw invalid_parameter("Rational: division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Representative of the value mod 1 lying in [0, 1).
    Rational mod_one() const {
        std::int64_t r = num_ % den_;
        if (r < 0) r += den_;
        return make_raw(r, den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        os << q.num_;
        if (q.den_ != 1) os << '/' << q.den_;
        return os;
    }

private:
    using i128 = __int128;

    static Rational make_raw(std::int64_t n, std::int64_t d) {
        Rational q;
        q.num_ = n;
        q.den_ = d;
        return q;
    }

    static Rational from_i128(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw resource_limit("Rational: 64-bit overflow");
        return make_raw(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// p-adic valuation of a nonzero rational: v(num) - v(den).
inline int padic_valuation(const Rational& q, std::uint32_t p) {
    if (q.is_zero()) throw invalid_parameter("padic_valuation: zero has no finite valuation");
    auto val = [p](std::int64_t n) {
        int v = 0;
        std::uint64_t u = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
        while (u % p == 0) { u /= p; ++v; }
        return v;
    };
    return val(q.num()) - val(q.den());
}

} // namespace padicts
