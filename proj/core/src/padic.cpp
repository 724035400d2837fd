#include "padicts/padic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace padicts {

namespace {

void require_prime(std::uint32_t p) {
    if (p < 2 || !is_prime(p)) throw invalid_parameter("p must be prime");
}

void require_same_prime(std::uint32_t a, std::uint32_t b) {
    if (a != b) throw invalid_parameter("operands must share the same prime");
}

void trim_trailing_zeros(std::vector<std::uint32_t>& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

Rational rational_power(std::uint32_t p, int e) {
    std::int64_t pw = 1;
    for (int t = 0; t < (e < 0 ? -e : e); ++t) pw *= p;
    return e < 0 ? Rational(1, pw) : Rational(pw);
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> digits_of_index(std::uint64_t n, std::uint32_t p) {
    require_prime(p);
    std::vector<std::uint32_t> digits;
    while (n != 0) {
        digits.push_back(static_cast<std::uint32_t>(n % p));
        n /= p;
    }
    return digits;
}

double NormValue::value(std::uint32_t p) const {
    if (zero_) return 0.0;
    return std::exp(exponent_ * std::log(static_cast<double>(p)));
}

UltrametricIndex::UltrametricIndex(std::uint32_t prime, std::uint64_t index)
    : prime_(prime), digits_(digits_of_index(index, prime)) {}

UltrametricIndex UltrametricIndex::from_digits(std::uint32_t prime, std::vector<std::uint32_t> digits) {
    require_prime(prime);
    for (auto d : digits)
        if (d >= prime) throw invalid_parameter("digit out of range for prime");
    trim_trailing_zeros(digits);
    UltrametricIndex n(prime);
    n.digits_ = std::move(digits);
    return n;
}

std::uint64_t UltrametricIndex::value() const {
    std::uint64_t v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        if (v > (UINT64_MAX - *it) / prime_)
            throw resource_limit("UltrametricIndex: value exceeds 64 bits");
        v = v * prime_ + *it;
    }
    return v;
}

NormValue UltrametricIndex::norm() const {
    if (digits_.empty()) return NormValue::zero();
    return NormValue::power(static_cast<int>(digits_.size()));
}

NormValue index_distance(const UltrametricIndex& m, const UltrametricIndex& n) {
    require_same_prime(m.prime(), n.prime());
    const auto& a = m.digits();
    const auto& b = n.digits();
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = len; i-- > 0;) {
        std::uint32_t da = i < a.size() ? a[i] : 0;
        std::uint32_t db = i < b.size() ? b[i] : 0;
        if (da != db) return NormValue::power(static_cast<int>(i) + 1);
    }
    return NormValue::zero();
}

NormValue index_distance(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
    require_prime(p);
    if (m == n) return NormValue::zero();
    int top = 0;
    for (int pos = 0; m != 0 || n != 0; ++pos) {
        if (m % p != n % p) top = pos;
        m /= p;
        n /= p;
    }
    return NormValue::power(top + 1);
}

UltrametricIndex group_add(const UltrametricIndex& m, const UltrametricIndex& n) {
    require_same_prime(m.prime(), n.prime());
    const std::uint32_t p = m.prime();
    const auto& a = m.digits();
    const auto& b = n.digits();
    std::size_t len = std::max(a.size(), b.size());
    std::vector<std::uint32_t> out(len, 0);
    std::uint32_t carry = 0;
    for (std::size_t i = len; i-- > 0;) {
        std::uint32_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0) + carry;
        out[i] = s % p;
        carry = s / p; // flows to position i-1; dropped past position 0
    }
    return UltrametricIndex::from_digits(p, std::move(out));
}

UltrametricIndex group_sub(const UltrametricIndex& m, const UltrametricIndex& n) {
    require_same_prime(m.prime(), n.prime());
    const std::uint32_t p = m.prime();
    const auto& a = m.digits();
    const auto& b = n.digits();
    std::size_t len = std::max(a.size(), b.size());
    std::vector<std::uint32_t> out(len, 0);
    std::int32_t borrow = 0;
    for (std::size_t i = len; i-- > 0;) {
        std::int32_t s = static_cast<std::int32_t>(i < a.size() ? a[i] : 0) -
                         static_cast<std::int32_t>(i < b.size() ? b[i] : 0) - borrow;
        if (s < 0) {
            s += static_cast<std::int32_t>(p);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(s);
    }
    return UltrametricIndex::from_digits(p, std::move(out));
}

std::uint64_t group_add(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
    return group_add(UltrametricIndex(p, m), UltrametricIndex(p, n)).value();
}

std::uint64_t group_sub(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
    return group_sub(UltrametricIndex(p, m), UltrametricIndex(p, n)).value();
}

PAdicDigits::PAdicDigits(std::uint32_t prime, int start_exponent, std::vector<std::uint32_t> digits)
    : prime_(prime), start_(start_exponent), digits_(std::move(digits)) {
    require_prime(prime);
    for (auto d : digits_)
        if (d >= prime) throw invalid_parameter("digit out of range for prime");
    trim_trailing_zeros(digits_);
    std::size_t lead = 0;
    while (lead < digits_.size() && digits_[lead] == 0) ++lead;
    if (lead > 0) {
        digits_.erase(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(lead));
        start_ += static_cast<int>(lead);
    }
    if (digits_.empty()) start_ = 0;
}

PAdicDigits PAdicDigits::zero(std::uint32_t prime) {
    return PAdicDigits(prime, 0, {});
}

PAdicDigits PAdicDigits::from_natural(std::uint32_t prime, std::uint64_t n) {
    return PAdicDigits(prime, 0, digits_of_index(n, prime));
}

PAdicDigits PAdicDigits::fraction_of(const UltrametricIndex& n) {
    // Index digit j sits at fraction exponent -(j+1); reversing the digit
    // order produces an ascending-exponent sequence starting at -(top+1).
    const auto& d = n.digits();
    std::vector<std::uint32_t> rev(d.rbegin(), d.rend());
    int start = d.empty() ? 0 : -static_cast<int>(d.size());
    return PAdicDigits(n.prime(), start, std::move(rev));
}

Rational PAdicDigits::value() const {
    Rational acc(0);
    Rational pw = rational_power(prime_, start_);
    const Rational p(static_cast<std::int64_t>(prime_));
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        acc = acc + Rational(static_cast<std::int64_t>(digits_[i])) * pw;
        pw = pw * p;
    }
    return acc;
}

Rational PAdicDigits::fractional_part() const {
    Rational acc(0);
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        int e = start_ + static_cast<int>(i);
        if (e >= 0) break;
        acc = acc + Rational(static_cast<std::int64_t>(digits_[i])) * rational_power(prime_, e);
    }
    return acc;
}

NormValue PAdicDigits::norm() const {
    if (digits_.empty()) return NormValue::zero();
    return NormValue::power(-start_);
}

Rational monna_real(const PAdicDigits& x) {
    Rational acc(0);
    const std::uint32_t p = x.prime();
    for (std::size_t i = 0; i < x.digits().size(); ++i) {
        int e = x.start_exponent() + static_cast<int>(i);
        acc = acc + Rational(static_cast<std::int64_t>(x.digits()[i])) * rational_power(p, -e - 1);
    }
    return acc;
}

std::complex<double> character(const Rational& fractional_part) {
    const Rational f = fractional_part.mod_one();
    return std::polar(1.0, 2.0 * std::numbers::pi * f.to_double());
}

std::complex<double> character(const PAdicDigits& x) {
    return character(x.fractional_part());
}

} // namespace padicts
