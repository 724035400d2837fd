#include "padicts/vladimirov.hpp"

#include <cmath>
#include <vector>

#include "padicts/padic.hpp"
#include "padicts/wavelets.hpp"

namespace padicts {

namespace {

void validate(const OperatorConfig& cfg) {
    if (!is_prime(cfg.prime)) throw invalid_parameter("p must be prime");
    if (!(cfg.alpha > 0.0)) throw invalid_parameter("alpha must be positive");
}

std::uint32_t window_exponent(const SampledSeries& series, const OperatorConfig& cfg) {
    validate(cfg);
    if (series.prime != cfg.prime) throw invalid_parameter("series prime differs from config");
    if (series.level != 0)
        throw invalid_parameter("operator acts on the natural-argument grid (level 0)");
    if (cfg.length != 0 && cfg.length != series.size())
        throw invalid_length("series length differs from configured window length");
    return power_exponent(series.size(), cfg.prime);
}

/// Exponent e with |eta^{-1}(x) - eta^{-1}(y)|_p = p^e, for x != y: one past
/// the highest differing base-p digit.
int distance_exponent(std::uint64_t x, std::uint64_t y, std::uint32_t p) {
    int top = 0;
    for (int pos = 0; x != 0 || y != 0; ++pos) {
        if (x % p != y % p) top = pos;
        x /= p;
        y /= p;
    }
    return top + 1;
}

/// p^{-(1+alpha) e} evaluated from the integer exponent in one step.
double kernel_value(int e, double log_p, double alpha) {
    return std::exp(-(1.0 + alpha) * static_cast<double>(e) * log_p);
}

} // namespace

double normalization_constant(std::uint32_t p, double alpha) {
    if (!is_prime(p)) throw invalid_parameter("p must be prime");
    if (!(alpha > 0.0)) throw invalid_parameter("alpha must be positive");
    const double pd = static_cast<double>(p);
    return (std::pow(pd, alpha) - 1.0) / (1.0 - std::pow(pd, -1.0 - alpha));
}

double tail_sum(std::uint32_t p, double alpha, std::uint32_t J) {
    if (!is_prime(p)) throw invalid_parameter("p must be prime");
    if (!(alpha > 0.0)) throw invalid_parameter("alpha must be positive");
    const double pd = static_cast<double>(p);
    return (1.0 - 1.0 / pd) * std::pow(pd, -static_cast<double>(J + 1) * alpha) /
           (1.0 - std::pow(pd, -alpha));
}

SampledSeries apply_direct(const SampledSeries& series, const OperatorConfig& cfg) {
    const std::uint32_t J = window_exponent(series, cfg);
    const std::size_t n = series.size();
    const std::uint32_t p = cfg.prime;
    const double log_p = std::log(static_cast<double>(p));
    const double c = normalization_constant(p, cfg.alpha);
    const double tail =
        cfg.mode == OperatorMode::zero_extended ? c * tail_sum(p, cfg.alpha, J) : 0.0;

    SampledSeries out;
    out.prime = p;
    out.level = 0;
    out.samples.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::complex<double> acc{0.0, 0.0};
        const std::complex<double> fx = series.samples[x];
        for (std::size_t y = 0; y < n; ++y) {
            if (y == x) continue;
            acc += (fx - series.samples[y]) * kernel_value(distance_exponent(x, y, p), log_p, cfg.alpha);
        }
        out.samples[x] = c * acc + tail * fx;
    }
    return out;
}

SampledSeries apply_spectral(const SampledSeries& series, const OperatorConfig& cfg) {
    window_exponent(series, cfg);

    std::complex<double> mean{0.0, 0.0};
    double sumsq = 0.0;
    for (const auto& s : series.samples) {
        mean += s;
        sumsq += std::norm(s);
    }
    mean /= static_cast<double>(series.size());
    const double rms = std::sqrt(sumsq / static_cast<double>(series.size()));
    if (std::abs(mean) > 1e-10 * rms)
        throw precondition_error(
            "apply_spectral requires a mean-free window: the constant component is not a "
            "wavelet eigenvector (finite-section annihilates it, zero-extension scales it "
            "by the tail term); remove the mean or use apply_direct");

    WaveletCoefficients coeffs = forward(series);
    const double log_p = std::log(static_cast<double>(cfg.prime));
    coeffs.for_each([&](const WaveletIndex& w, std::complex<double> cval) {
        const double eig = std::exp(cfg.alpha * (1.0 - static_cast<double>(w.j)) * log_p);
        coeffs.set_detail(w, eig * cval);
    });
    coeffs.set_mean({0.0, 0.0});
    return inverse(coeffs);
}

Eigen::MatrixXd build_matrix(const OperatorConfig& cfg) {
    validate(cfg);
    const std::uint64_t n = cfg.length;
    const std::uint32_t J = power_exponent(n, cfg.prime);
    if (n > cfg.matrix_cap) throw resource_limit("build_matrix: window exceeds the matrix cap");
    const double log_p = std::log(static_cast<double>(cfg.prime));
    const double c = normalization_constant(cfg.prime, cfg.alpha);
    const double tail =
        cfg.mode == OperatorMode::zero_extended ? c * tail_sum(cfg.prime, cfg.alpha, J) : 0.0;

    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::uint64_t x = 0; x < n; ++x) {
        double row_sum = 0.0;
        for (std::uint64_t y = 0; y < n; ++y) {
            if (y == x) continue;
            const double k = kernel_value(distance_exponent(x, y, cfg.prime), log_p, cfg.alpha);
            m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = -c * k;
            row_sum += k;
        }
        m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = c * row_sum + tail;
    }
    return m;
}

} // namespace padicts
