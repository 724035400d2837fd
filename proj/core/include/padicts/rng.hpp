#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace padicts {

/// Philox-4x32-10 counter-based generator. Each 128-bit counter/64-bit key
/// pair maps to an independent 128-bit block, so draws keyed by
/// (seed, realization, coefficient index) are reproducible and independent
/// of evaluation order.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        constexpr std::uint32_t mul_a = 0xD2511F53u;
        constexpr std::uint32_t mul_b = 0xCD9E8D57u;
        constexpr std::uint32_t weyl_a = 0x9E3779B9u;
        constexpr std::uint32_t weyl_b = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t prod_a = static_cast<std::uint64_t>(mul_a) * ctr[0];
            const std::uint64_t prod_b = static_cast<std::uint64_t>(mul_b) * ctr[2];
            const std::uint32_t hi_a = static_cast<std::uint32_t>(prod_a >> 32);
            const std::uint32_t lo_a = static_cast<std::uint32_t>(prod_a);
            const std::uint32_t hi_b = static_cast<std::uint32_t>(prod_b >> 32);
            const std::uint32_t lo_b = static_cast<std::uint32_t>(prod_b);
            ctr = {hi_b ^ ctr[1] ^ key[0], lo_b, hi_a ^ ctr[3] ^ key[1], lo_a};
            key[0] += weyl_a;
            key[1] += weyl_b;
        }
        return ctr;
    }
};

/// One block keyed by an arbitrary 64-bit seed and a 128-bit counter.
inline std::array<std::uint32_t, 4> philox_block(std::uint64_t seed, std::uint64_t ctr_lo,
                                                 std::uint64_t ctr_hi) {
    return Philox4x32::block(
        {static_cast<std::uint32_t>(ctr_lo), static_cast<std::uint32_t>(ctr_lo >> 32),
         static_cast<std::uint32_t>(ctr_hi), static_cast<std::uint32_t>(ctr_hi >> 32)},
        {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
}

/// Circular complex Gaussian with <|d|^2> = 1 (real and imaginary parts
/// independent N(0, 1/2)): d = sqrt(-ln u1) exp(2 pi i u2).
std::complex<double> gaussian_complex_unit(std::uint64_t seed, std::uint64_t ctr_lo,
                                           std::uint64_t ctr_hi);

} // namespace padicts
