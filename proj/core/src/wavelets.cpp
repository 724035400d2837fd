#include "padicts/wavelets.hpp"

#include <cmath>
#include <numbers>

namespace padicts {

namespace {

using cplx = std::complex<double>;

/// exp(2 pi i t / p) with t reduced mod p. The half and full turns are
/// returned exactly so the p = 2 machinery stays real-valued.
cplx unit_root(std::uint32_t p, std::uint64_t t) {
    t %= p;
    if (t == 0) return {1.0, 0.0};
    if (2 * t == p) return {-1.0, 0.0};
    double a = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p);
    return {std::cos(a), std::sin(a)};
}

double inv_sqrt_pow(std::uint32_t p, std::uint32_t t) {
    return 1.0 / std::sqrt(static_cast<double>(power_of(p, t)));
}

SampledSeries block_mean(const SampledSeries& series, std::uint64_t block,
                         std::uint32_t out_level) {
    if (series.size() % block != 0)
        throw invalid_length("series length must be a multiple of the block size");
    SampledSeries out;
    out.prime = series.prime;
    out.level = out_level;
    const std::size_t n_blocks = series.size() / block;
    const bool collapse = out_level != series.level;
    out.samples.resize(collapse ? n_blocks : series.size());
    for (std::size_t b = 0; b < n_blocks; ++b) {
        cplx sum{0.0, 0.0};
        for (std::uint64_t i = 0; i < block; ++i)
            sum += series.samples[b * block + i];
        cplx mean = sum / static_cast<double>(block);
        if (collapse) {
            out.samples[b] = mean;
        } else {
            for (std::uint64_t i = 0; i < block; ++i)
                out.samples[b * block + i] = mean;
        }
    }
    return out;
}

} // namespace

double haar_eval(int j, std::int64_t n, std::int64_t x) {
    if (j < 1) throw invalid_parameter("haar_eval: scale j must be >= 1");
    if (j > 62) throw invalid_parameter("haar_eval: scale j too large");
    const std::int64_t block = std::int64_t{1} << j;
    const std::int64_t lo = n * block;
    if (x < lo || x >= lo + block) return 0.0;
    const double amp = 1.0 / std::sqrt(static_cast<double>(block));
    return (x - lo) < block / 2 ? amp : -amp;
}

SampledSeries haar_project(const SampledSeries& series, int j) {
    if (j < 0) throw invalid_parameter("haar_project: j must be >= 0");
    if (j == 0) return series;
    if (j > 62) throw invalid_parameter("haar_project: j too large");
    return block_mean(series, std::uint64_t{1} << j, series.level);
}

SampledSeries monna_project(const SampledSeries& series, int j) {
    if (j < 0) throw invalid_parameter("monna_project: j must be >= 0");
    if (j == 0) return series;
    return block_mean(series, power_of(series.prime, static_cast<std::uint32_t>(j)),
                      series.level);
}

SampledSeries pi_project(const SampledSeries& series, std::uint32_t target_level) {
    if (target_level <= series.level)
        throw invalid_parameter("pi_project: target level must exceed the series level");
    return block_mean(series, power_of(series.prime, target_level - series.level),
                      target_level);
}

std::complex<double> padic_wavelet_eval(const WaveletIndex& w, const UltrametricIndex& x,
                                        std::uint32_t J) {
    const std::uint32_t p = x.prime();
    if (w.k < 1 || w.k >= p) throw invalid_parameter("wavelet twist k out of range");
    if (w.j < 1 || w.j > J) throw invalid_parameter("wavelet scale j out of range");
    const std::uint64_t xv = x.value();
    const std::uint64_t ball_size = power_of(p, w.j);
    if (xv / ball_size != w.ball) return {0.0, 0.0};
    // On the support ball the character reduces to exp(2 pi i k d / p) with
    // d the base-p digit of x at position j-1.
    const std::uint64_t d = (xv / (ball_size / p)) % p;
    return inv_sqrt_pow(p, w.j) * unit_root(p, static_cast<std::uint64_t>(w.k) * d);
}

WaveletCoefficients::WaveletCoefficients(std::uint32_t prime, std::uint32_t J,
                                         std::uint32_t level)
    : prime_(prime), J_(J), level_(level) {
    if (!is_prime(prime)) throw invalid_parameter("p must be prime");
    if (J < level) throw invalid_parameter("window exponent J must be at least the level");
    const std::uint32_t T = J - level;
    const std::uint64_t n = power_of(prime, T);
    scale_offset_.resize(T);
    std::size_t off = 0;
    for (std::uint32_t t = 1; t <= T; ++t) {
        scale_offset_[t - 1] = off;
        off += (n / power_of(prime, t)) * (prime - 1);
    }
    detail_.assign(off, {0.0, 0.0});
}

std::size_t WaveletCoefficients::offset(const WaveletIndex& w) const {
    if (w.k < 1 || w.k >= prime_) throw invalid_parameter("wavelet twist k out of range");
    if (w.j <= level_ || w.j > J_) throw invalid_parameter("wavelet scale j out of range");
    const std::uint32_t t = w.j - level_;
    const std::uint64_t balls = power_of(prime_, J_ - w.j);
    if (w.ball >= balls) throw invalid_parameter("wavelet ball out of range");
    return scale_offset_[t - 1] + w.ball * (prime_ - 1) + (w.k - 1);
}

void WaveletCoefficients::for_each(
    const std::function<void(const WaveletIndex&, std::complex<double>)>& fn) const {
    std::size_t idx = 0;
    for (std::uint32_t j = level_ + 1; j <= J_; ++j) {
        const std::uint64_t balls = power_of(prime_, J_ - j);
        for (std::uint64_t b = 0; b < balls; ++b)
            for (std::uint32_t k = 1; k < prime_; ++k)
                fn(WaveletIndex{k, j, b}, detail_[idx++]);
    }
}

double WaveletCoefficients::squared_norm() const {
    double s = std::norm(mean_);
    for (const auto& c : detail_) s += std::norm(c);
    return s;
}

WaveletCoefficients forward(const SampledSeries& window) {
    const std::uint32_t p = window.prime;
    if (!is_prime(p)) throw invalid_parameter("p must be prime");
    const std::uint32_t T = power_exponent(window.size(), p);
    WaveletCoefficients out(p, window.level + T, window.level);

    std::vector<cplx> sums = window.samples;
    std::size_t idx = 0;
    for (std::uint32_t t = 1; t <= T; ++t) {
        const std::size_t n_balls = sums.size() / p;
        const double amp = inv_sqrt_pow(p, t);
        for (std::size_t b = 0; b < n_balls; ++b) {
            const cplx* u = sums.data() + b * p;
            cplx total{0.0, 0.0};
            for (std::uint32_t i = 0; i < p; ++i) total += u[i];
            for (std::uint32_t k = 1; k < p; ++k) {
                cplx acc{0.0, 0.0};
                for (std::uint32_t i = 0; i < p; ++i)
                    acc += std::conj(unit_root(p, static_cast<std::uint64_t>(k) * i)) * u[i];
                out.detail_[idx++] = amp * acc;
            }
            sums[b] = total;
        }
        sums.resize(n_balls);
    }
    out.mean_ = inv_sqrt_pow(p, T) * sums[0];
    return out;
}

SampledSeries inverse(const WaveletCoefficients& coeffs) {
    const std::uint32_t p = coeffs.prime();
    const std::uint32_t T = coeffs.scale_bound() - coeffs.level();
    const double inv_p = 1.0 / static_cast<double>(p);

    std::vector<cplx> sums{coeffs.mean_ * std::sqrt(static_cast<double>(power_of(p, T)))};
    for (std::uint32_t t = T; t >= 1; --t) {
        const std::size_t n_balls = sums.size();
        const double amp = std::sqrt(static_cast<double>(power_of(p, t)));
        const std::size_t base = coeffs.scale_offset_[t - 1];
        std::vector<cplx> next(n_balls * p);
        for (std::size_t b = 0; b < n_balls; ++b) {
            const cplx* d = coeffs.detail_.data() + base + b * (p - 1);
            for (std::uint32_t i = 0; i < p; ++i) {
                cplx acc = sums[b];
                for (std::uint32_t k = 1; k < p; ++k)
                    acc += amp * unit_root(p, static_cast<std::uint64_t>(k) * i) * d[k - 1];
                next[b * p + i] = acc * inv_p;
            }
        }
        sums = std::move(next);
    }

    SampledSeries out;
    out.prime = p;
    out.level = coeffs.level();
    out.samples = std::move(sums);
    return out;
}

} // namespace padicts
