#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "padicts/errors.hpp"
#include "padicts/rational.hpp"

namespace padicts {

bool is_prime(std::uint64_t n);

/// Base-p digits of a natural number, least significant first.
/// Zero maps to the empty sequence.
std::vector<std::uint32_t> digits_of_index(std::uint64_t n, std::uint32_t p);

/// An exact ultrametric norm: either zero or an integer power p^e.
/// The prime is supplied only when converting to a floating value, so norm
/// comparisons never round.
class NormValue {
public:
    static NormValue zero() { return NormValue(); }
    static NormValue power(int exponent) {
        NormValue v;
        v.zero_ = false;
        v.exponent_ = exponent;
        return v;
    }

    bool is_zero() const { return zero_; }

    int exponent() const {
        if (zero_) throw invalid_parameter("NormValue: zero norm has no exponent");
        return exponent_;
    }

    double value(std::uint32_t p) const;

    friend bool operator==(const NormValue& a, const NormValue& b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.exponent_ == b.exponent_);
    }
    friend bool operator<(const NormValue& a, const NormValue& b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.exponent_ < b.exponent_;
    }
    friend bool operator<=(const NormValue& a, const NormValue& b) { return !(b < a); }

private:
    bool zero_ = true;
    int exponent_ = 0;
};

/// A natural number read as an element of Q_p/Z_p: index n = sum d_j p^j
/// corresponds, by digit reversal, to the fraction sum d_j p^{-(j+1)}.
/// Stored as the canonical base-p digit sequence, so indices of any size
/// are representable; `value()` materializes the integer when it fits.
class UltrametricIndex {
public:
    UltrametricIndex(std::uint32_t prime, std::uint64_t index);

    static UltrametricIndex from_digits(std::uint32_t prime, std::vector<std::uint32_t> digits);

    std::uint32_t prime() const { return prime_; }

    /// Canonical digits, least significant first, no trailing zeros.
    const std::vector<std::uint32_t>& digits() const { return digits_; }

    std::uint64_t value() const;

    bool is_zero() const { return digits_.empty(); }

    /// |eta^{-1}(n)|_p: zero for index 0, else p^(t+1) where t is the highest
    /// nonzero digit position (the fraction's leading term sits at p^{-(t+1)}).
    NormValue norm() const;

    friend bool operator==(const UltrametricIndex& a, const UltrametricIndex& b) {
        return a.prime_ == b.prime_ && a.digits_ == b.digits_;
    }

private:
    explicit UltrametricIndex(std::uint32_t prime) : prime_(prime) {}

    std::uint32_t prime_;
    std::vector<std::uint32_t> digits_;
};

/// |eta^{-1}(m) - eta^{-1}(n)|_p. Zero iff m = n, else p^(t+1) where t is the
/// highest digit position at which m and n differ (that digit carries the
/// difference's leading fraction term; lower positions only feed borrows
/// further down).
NormValue index_distance(const UltrametricIndex& m, const UltrametricIndex& n);

/// Convenience overload on raw indices.
NormValue index_distance(std::uint64_t m, std::uint64_t n, std::uint32_t p);

/// Group operations of Q_p/Z_p pulled back to indices: digitwise base-p
/// addition with carries moving toward lower positions, carry out of
/// position 0 dropped (fraction addition mod 1).
UltrametricIndex group_add(const UltrametricIndex& m, const UltrametricIndex& n);
UltrametricIndex group_sub(const UltrametricIndex& m, const UltrametricIndex& n);

std::uint64_t group_add(std::uint64_t m, std::uint64_t n, std::uint32_t p);
std::uint64_t group_sub(std::uint64_t m, std::uint64_t n, std::uint32_t p);

/// A p-adic number with terminating expansion x = sum_{i=gamma}^{m} x_i p^i.
/// Digits are trimmed at both ends so the representation is canonical;
/// zero is the empty sequence.
class PAdicDigits {
public:
    PAdicDigits(std::uint32_t prime, int start_exponent, std::vector<std::uint32_t> digits);

    static PAdicDigits zero(std::uint32_t prime);

    /// Expansion of a natural number (digits at exponents >= 0).
    static PAdicDigits from_natural(std::uint32_t prime, std::uint64_t n);

    /// The fraction eta^{-1}(n) in Q_p/Z_p (digits at exponents < 0).
    static PAdicDigits fraction_of(const UltrametricIndex& n);

    std::uint32_t prime() const { return prime_; }
    int start_exponent() const { return start_; }
    const std::vector<std::uint32_t>& digits() const { return digits_; }
    bool is_zero() const { return digits_.empty(); }

    /// Exact value sum x_i p^i.
    Rational value() const;

    /// The p-adic fractional part sum_{i<0} x_i p^i, a rational in [0,1).
    Rational fractional_part() const;

    /// p^{-gamma} for nonzero values, zero otherwise.
    NormValue norm() const;

private:
    std::uint32_t prime_;
    int start_ = 0;
    std::vector<std::uint32_t> digits_; // digit at exponent start_ + i
};

/// Monna map: sum x_i p^i -> sum x_i p^{-i-1}, exact.
Rational monna_real(const PAdicDigits& x);

/// Additive character chi(x) = exp(2 pi i frac_p(x)).
std::complex<double> character(const PAdicDigits& x);

/// Character evaluated directly on a rational fractional part.
std::complex<double> character(const Rational& fractional_part);

} // namespace padicts
