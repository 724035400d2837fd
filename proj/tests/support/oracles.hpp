#pragma once

// Independent slow-path oracles for the test suites. Everything here works
// through exact rational arithmetic and explicit formula evaluation, never
// through the digit shortcuts or butterfly transforms under test.

#include <complex>
#include <cstdint>
#include <vector>

#include "padicts/padic.hpp"
#include "padicts/series.hpp"
#include "padicts/wavelets.hpp"

namespace oracles {

using padicts::Rational;

inline Rational rational_power(std::uint32_t p, int e) {
    std::int64_t pw = 1;
    for (int t = 0; t < (e < 0 ? -e : e); ++t) pw *= p;
    return e < 0 ? Rational(1, pw) : Rational(pw);
}

/// eta^{-1}(n) as an exact rational in [0,1): sum of d_j p^{-(j+1)}.
inline Rational fraction_of_index(std::uint64_t n, std::uint32_t p) {
    Rational acc(0);
    int j = 0;
    while (n != 0) {
        acc = acc + Rational(static_cast<std::int64_t>(n % p)) * rational_power(p, -(j + 1));
        n /= p;
        ++j;
    }
    return acc;
}

/// |q|_p of a nonzero rational as an exact rational.
inline Rational rational_norm(const Rational& q, std::uint32_t p) {
    return rational_power(p, -padicts::padic_valuation(q, p));
}

/// Distance oracle: subtract the fractions in Q and read the valuation.
inline padicts::NormValue distance_by_fractions(std::uint64_t m, std::uint64_t n,
                                                std::uint32_t p) {
    const Rational diff = fraction_of_index(m, p) - fraction_of_index(n, p);
    if (diff.is_zero()) return padicts::NormValue::zero();
    return padicts::NormValue::power(-padicts::padic_valuation(diff, p));
}

/// Inverse Monna on fractions with p-power denominator: digit reversal.
inline std::uint64_t index_of_fraction(const Rational& q, std::uint32_t p) {
    const Rational f = q.mod_one();
    std::uint64_t den = static_cast<std::uint64_t>(f.den());
    std::uint32_t t = 0;
    while (den > 1) {
        den /= p;
        ++t;
    }
    // numerator scaled to denominator p^t, digits reversed over width t
    std::uint64_t num = static_cast<std::uint64_t>(f.num());
    std::uint64_t scale = static_cast<std::uint64_t>(rational_power(p, static_cast<int>(t)).num()) /
                          static_cast<std::uint64_t>(f.den());
    num *= scale;
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i < t; ++i) {
        idx = idx * p + num % p;
        num /= p;
    }
    return idx;
}

/// Group addition oracle: rational addition mod one, then inverse Monna.
inline std::uint64_t add_by_fractions(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
    return index_of_fraction(fraction_of_index(m, p) + fraction_of_index(n, p), p);
}

/// Continuum wavelet value by the defining formula: the character evaluated
/// at the exact rational p^{-1} k (p^j x - n), gated by the support ball.
inline std::complex<double> wavelet_by_character(std::uint32_t k, std::uint32_t j,
                                                 std::uint64_t ball, std::uint64_t x,
                                                 std::uint32_t p) {
    const Rational xf = fraction_of_index(x, p);
    const Rational nf = fraction_of_index(ball, p);
    const Rational arg = rational_power(p, static_cast<int>(j)) * xf - nf;
    if (!arg.is_zero() && padicts::padic_valuation(arg, p) < 0) return {0.0, 0.0};
    const Rational phase = rational_power(p, -1) * Rational(static_cast<std::int64_t>(k)) * arg;
    const double amp = rational_power(p, -static_cast<int>(j)).to_double();
    return std::sqrt(amp) * padicts::character(phase);
}

/// Dense sampled wavelet on a level-l window: continuum values scaled by
/// p^{l/2} so the family is orthonormal in counting measure.
inline std::vector<std::complex<double>> dense_wavelet(const padicts::WaveletIndex& w,
                                                       std::uint32_t p, std::uint32_t J,
                                                       std::uint32_t level) {
    const std::uint64_t n = padicts::power_of(p, J - level);
    const std::uint64_t stride = padicts::power_of(p, level);
    const double scale = std::sqrt(static_cast<double>(stride));
    std::vector<std::complex<double>> v(n);
    for (std::uint64_t x = 0; x < n; ++x)
        v[x] = scale * wavelet_by_character(w.k, w.j, w.ball, x * stride, p);
    return v;
}

/// Full dense family: normalized window indicator first, then every detail
/// wavelet in the canonical order.
inline std::vector<std::vector<std::complex<double>>> dense_family(std::uint32_t p,
                                                                   std::uint32_t J,
                                                                   std::uint32_t level) {
    const std::uint64_t n = padicts::power_of(p, J - level);
    std::vector<std::vector<std::complex<double>>> family;
    family.emplace_back(n, std::complex<double>(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
    for (std::uint32_t j = level + 1; j <= J; ++j)
        for (std::uint64_t b = 0; b < padicts::power_of(p, J - j); ++b)
            for (std::uint32_t k = 1; k < p; ++k)
                family.push_back(dense_wavelet({k, j, b}, p, J, level));
    return family;
}

/// Dense forward transform: plain inner products against the family.
inline padicts::WaveletCoefficients dense_forward(const padicts::SampledSeries& window) {
    const std::uint32_t p = window.prime;
    const std::uint32_t T = padicts::power_exponent(window.size(), p);
    const std::uint32_t J = window.level + T;
    padicts::WaveletCoefficients out(p, J, window.level);
    std::complex<double> mean{0.0, 0.0};
    for (std::size_t x = 0; x < window.size(); ++x) mean += window.samples[x];
    out.set_mean(mean / std::sqrt(static_cast<double>(window.size())));
    for (std::uint32_t j = window.level + 1; j <= J; ++j) {
        for (std::uint64_t b = 0; b < padicts::power_of(p, J - j); ++b) {
            for (std::uint32_t k = 1; k < p; ++k) {
                const padicts::WaveletIndex w{k, j, b};
                const auto psi = dense_wavelet(w, p, J, window.level);
                std::complex<double> acc{0.0, 0.0};
                for (std::size_t x = 0; x < window.size(); ++x)
                    acc += std::conj(psi[x]) * window.samples[x];
                out.set_detail(w, acc);
            }
        }
    }
    return out;
}

/// Dense reconstruction from coefficients.
inline padicts::SampledSeries dense_inverse(const padicts::WaveletCoefficients& coeffs) {
    const std::uint32_t p = coeffs.prime();
    const std::uint64_t n = padicts::power_of(p, coeffs.scale_bound() - coeffs.level());
    padicts::SampledSeries out;
    out.prime = p;
    out.level = coeffs.level();
    out.samples.assign(n, coeffs.mean() / std::sqrt(static_cast<double>(n)));
    coeffs.for_each([&](const padicts::WaveletIndex& w, std::complex<double> c) {
        const auto psi = dense_wavelet(w, p, coeffs.scale_bound(), coeffs.level());
        for (std::uint64_t x = 0; x < n; ++x) out.samples[x] += c * psi[x];
    });
    return out;
}

} // namespace oracles
