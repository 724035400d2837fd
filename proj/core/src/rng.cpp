#include "padicts/rng.hpp"

#include <cmath>
#include <numbers>

namespace padicts {

std::complex<double> gaussian_complex_unit(std::uint64_t seed, std::uint64_t ctr_lo,
                                           std::uint64_t ctr_hi) {
    const auto words = philox_block(seed, ctr_lo, ctr_hi);
    const std::uint64_t a =
        (static_cast<std::uint64_t>(words[0]) << 32 | words[1]) >> 11; // 53 bits
    const std::uint64_t b =
        (static_cast<std::uint64_t>(words[2]) << 32 | words[3]) >> 11;
    // u1 in (0,1] keeps the log finite; u2 in [0,1).
    const double u1 = static_cast<double>(a + 1) * 0x1p-53;
    const double u2 = static_cast<double>(b) * 0x1p-53;
    const double radius = std::sqrt(-std::log(u1));
    return std::polar(radius, 2.0 * std::numbers::pi * u2);
}

} // namespace padicts
