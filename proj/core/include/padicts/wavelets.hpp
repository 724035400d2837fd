#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "padicts/padic.hpp"
#include "padicts/series.hpp"

namespace padicts {

/// Discrete Haar wavelet on the integers: 2^{-j/2} psi(2^{-j} x - n) with
/// psi = 1_[0,1/2) - 1_[1/2,1). Nonzero only on [n 2^j, (n+1) 2^j).
double haar_eval(int j, std::int64_t n, std::int64_t x);

/// Orthogonal projection onto the span of dyadic block indicators: every
/// sample is replaced by the mean of its block [n 2^j, (n+1) 2^j).
SampledSeries haar_project(const SampledSeries& series, int j);

/// The same projection written through the group structure of Q_p/Z_p:
/// f(x) -> p^{-j} sum over the p^j group translations of x that stay inside
/// its radius-p^j ball. Blocks of p^j consecutive indices are exactly those
/// balls, so this is block averaging in base p.
SampledSeries monna_project(const SampledSeries& series, int j);

/// Re-discretize from level `series.level` to the coarser `target_level`:
/// block means of p^(target-level) consecutive samples.
SampledSeries pi_project(const SampledSeries& series, std::uint32_t target_level);

/// Identifies one detail wavelet of a window of p^(J-l) samples at level l:
/// twist k in 1..p-1, scale j in l+1..J, and the support ball
/// b in 0..p^(J-j)-1 covering sample indices [b p^(j-l), (b+1) p^(j-l)).
struct WaveletIndex {
    std::uint32_t k = 1;
    std::uint32_t j = 1;
    std::uint64_t ball = 0;

    friend bool operator==(const WaveletIndex&, const WaveletIndex&) = default;
};

/// Value of the p-adic wavelet psi_{k;j,b} at window index x (level 0,
/// window p^J). Zero off the support ball; modulus p^{-j/2} on it.
std::complex<double> padic_wavelet_eval(const WaveletIndex& w, const UltrametricIndex& x,
                                        std::uint32_t J);

/// Orthonormal expansion of a level-l window of p^(J-l) samples: one mean
/// coefficient (against the normalized indicator p^{-(J-l)/2} 1) plus
/// p^(J-l) - 1 detail coefficients indexed by (k, j, ball).
class WaveletCoefficients {
public:
    WaveletCoefficients(std::uint32_t prime, std::uint32_t J, std::uint32_t level);

    std::uint32_t prime() const { return prime_; }
    std::uint32_t scale_bound() const { return J_; }
    std::uint32_t level() const { return level_; }

    std::complex<double> mean() const { return mean_; }
    void set_mean(std::complex<double> c) { mean_ = c; }

    std::complex<double> detail(const WaveletIndex& w) const { return detail_[offset(w)]; }
    void set_detail(const WaveletIndex& w, std::complex<double> c) { detail_[offset(w)] = c; }

    std::size_t detail_count() const { return detail_.size(); }

    /// Visits every detail index in the canonical order (ascending scale,
    /// then ball, then k).
    void for_each(const std::function<void(const WaveletIndex&, std::complex<double>)>& fn) const;

    /// Sum of |c|^2 over mean and detail coefficients.
    double squared_norm() const;

private:
    friend WaveletCoefficients forward(const SampledSeries&);
    friend SampledSeries inverse(const WaveletCoefficients&);

    std::size_t offset(const WaveletIndex& w) const;

    std::uint32_t prime_;
    std::uint32_t J_;
    std::uint32_t level_;
    std::complex<double> mean_{0.0, 0.0};
    std::vector<std::complex<double>> detail_;
    std::vector<std::size_t> scale_offset_; // start of each scale block, t = 1..J-l
};

/// Forward orthonormal transform of a window whose length is an exact power
/// of p. O(N log N): one p-point DFT per ball per scale.
WaveletCoefficients forward(const SampledSeries& window);

/// Inverse transform; inverse(forward(f)) reproduces f to roundoff.
SampledSeries inverse(const WaveletCoefficients& coeffs);

} // namespace padicts
