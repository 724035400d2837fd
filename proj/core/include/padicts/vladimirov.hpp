#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "padicts/series.hpp"

namespace padicts {

/// How the fractional-derivative kernel treats indices outside the window.
/// `finite_section` restricts the defining sum to the observed window; it is
/// the honest operator for measured series. `zero_extended` treats the input
/// as a function on all naturals vanishing off the window, which adds an
/// exact closed-form tail term and makes inside-window wavelets exact
/// eigenvectors.
enum class OperatorMode { finite_section, zero_extended };

struct OperatorConfig {
    std::uint32_t prime = 2;
    double alpha = 1.0;
    OperatorMode mode = OperatorMode::finite_section;
    std::uint64_t length = 0;       // window length, an exact power of p
    std::uint64_t matrix_cap = 4096;
};

/// Kernel prefactor (p^alpha - 1)/(1 - p^{-1-alpha}).
double normalization_constant(std::uint32_t p, double alpha);

/// Exact tail sum over all indices outside a window of p^J points:
/// sum over shells p^m, m > J, of (p^m - p^{m-1}) p^{-m(1+alpha)}
/// = (1 - p^{-1}) p^{-(J+1)alpha} / (1 - p^{-alpha}).
/// Constant in the window point because the window is one ball.
double tail_sum(std::uint32_t p, double alpha, std::uint32_t J);

/// Kernel-sum application of the discretized fractional derivative:
/// out(x) = c sum_y (f(x) - f(y)) / |eta^{-1}(x) - eta^{-1}(y)|_p^{1+alpha},
/// with the tail term added in zero-extended mode.
SampledSeries apply_direct(const SampledSeries& series, const OperatorConfig& cfg);

/// Spectral application: forward transform, scale detail (k,j,b) by
/// p^{alpha(1-j)}, drop the mean, inverse transform. Requires a mean-free
/// window (mean within 1e-10 of the window RMS); agrees with zero-extended
/// apply_direct on such inputs because they are spans of inside-window
/// wavelets.
SampledSeries apply_spectral(const SampledSeries& series, const OperatorConfig& cfg);

/// Dense materialization M with apply_direct(f) = M f. Symmetric; in
/// finite-section mode rows sum to zero and M is diagonally dominant.
Eigen::MatrixXd build_matrix(const OperatorConfig& cfg);

} // namespace padicts
