#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "padicts/errors.hpp"

namespace padicts {

/// A finite complex series indexed 0..N-1 at discretization level `level`:
/// each sample is the mean of the underlying function over a ball of radius
/// p^level. The origin offset is fixed at 0.
struct SampledSeries {
    std::uint32_t prime = 2;
    std::uint32_t level = 0;
    std::vector<std::complex<double>> samples;

    std::size_t size() const { return samples.size(); }
};

inline bool is_power_of(std::uint64_t n, std::uint32_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

/// log_p(N) for an exact power, otherwise throws invalid_length.
inline std::uint32_t power_exponent(std::uint64_t n, std::uint32_t p) {
    std::uint32_t e = 0;
    std::uint64_t v = 1;
    while (v < n) {
        v *= p;
        ++e;
    }
    if (v != n) throw invalid_length("series length must be an exact power of p");
    return e;
}

inline std::uint64_t power_of(std::uint32_t p, std::uint32_t e) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < e; ++i) v *= p;
    return v;
}

} // namespace padicts
