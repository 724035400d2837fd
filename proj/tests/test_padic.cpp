#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "padicts/padic.hpp"
#include "support/oracles.hpp"

using namespace padicts;

TEST_CASE("digits_of_index") {
    CHECK(digits_of_index(0, 2).empty());
    CHECK(digits_of_index(6, 2) == std::vector<std::uint32_t>{0, 1, 1});
    CHECK(digits_of_index(7, 3) == std::vector<std::uint32_t>{1, 2});
    CHECK_THROWS_AS(digits_of_index(5, 4), invalid_parameter);
    CHECK_THROWS_AS(digits_of_index(5, 1), invalid_parameter);
    CHECK_THROWS_AS(digits_of_index(5, 0), invalid_parameter);

    // reassemble
    std::mt19937_64 gen(101);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = trial % 2 ? 3 : 7;
        const std::uint64_t n = gen() % 100000;
        const auto d = digits_of_index(n, p);
        std::uint64_t v = 0;
        for (auto it = d.rbegin(); it != d.rend(); ++it) {
            CHECK(*it < p);
            v = v * p + *it;
        }
        CHECK(v == n);
        if (!d.empty()) CHECK(d.back() != 0);
    }
}

TEST_CASE("monna_real on terminating expansions") {
    CHECK(monna_real(PAdicDigits::zero(2)) == Rational(0));
    // single digit at exponent -1 (the fraction 1/2) lands on 1
    CHECK(monna_real(PAdicDigits(2, -1, {1})) == Rational(1));
    // the integer 2 = 1*2^1 lands on 1/4
    CHECK(monna_real(PAdicDigits(2, 1, {1})) == Rational(1, 4));

    // fractions of indices land back on the index value
    for (std::uint64_t n : {0ull, 1ull, 5ull, 12ull, 200ull}) {
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto frac = PAdicDigits::fraction_of(UltrametricIndex(p, n));
            CHECK(monna_real(frac) == Rational(static_cast<std::int64_t>(n)));
        }
    }
}

TEST_CASE("index_distance: fixed points and fraction oracle") {
    const std::uint32_t p = 2;
    CHECK(index_distance(5, 5, p).is_zero());
    CHECK(index_distance(0, 1, p) == NormValue::power(1));
    CHECK(index_distance(2, 3, p) == NormValue::power(1));
    CHECK(index_distance(0, 2, p) == NormValue::power(2));
    CHECK(index_distance(0, 5, p) == NormValue::power(3));

    CHECK_THROWS_AS(index_distance(UltrametricIndex(2, 1), UltrametricIndex(3, 1)),
                    invalid_parameter);

    std::mt19937_64 gen(7);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 300; ++trial) {
            const std::uint64_t m = gen() % 2187;
            const std::uint64_t n = gen() % 2187;
            CHECK(index_distance(m, n, q) == oracles::distance_by_fractions(m, n, q));
        }
    }
}

TEST_CASE("index_distance: ultrametric inequality and shells") {
    std::mt19937_64 gen(13);
    for (std::uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 500; ++trial) {
            const std::uint64_t a = gen() % 4096, b = gen() % 4096, c = gen() % 4096;
            const auto dac = index_distance(a, c, p);
            const auto dab = index_distance(a, b, p);
            const auto dbc = index_distance(b, c, p);
            const auto mx = dab < dbc ? dbc : dab;
            CHECK(dac <= mx);
            if (!(dab == dbc) && a != b && b != c) CHECK(dac == mx);
        }
    }

    // shell at radius p^e around a holds p^e - p^{e-1} of the first p^E points
    for (std::uint32_t p : {2u, 3u}) {
        const std::uint32_t E = 6;
        const std::uint64_t total = power_of(p, E);
        for (std::uint64_t a : {std::uint64_t{0}, std::uint64_t{5}, total - 1}) {
            for (int e = 1; e < static_cast<int>(E); ++e) {
                std::uint64_t count = 0;
                for (std::uint64_t n = 0; n < total; ++n)
                    if (index_distance(a, n, p) == NormValue::power(e)) ++count;
                CHECK(count == power_of(p, e) - power_of(p, e - 1));
            }
        }
    }
}

TEST_CASE("blocks of p^j consecutive indices are balls") {
    const std::uint32_t cases[][2] = {{2, 6}, {3, 4}, {5, 3}};
    for (auto [p, E] : cases) {
        const std::uint64_t total = power_of(p, E);
        for (std::uint32_t j = 0; j <= E; ++j) {
            const std::uint64_t block = power_of(p, j);
            for (std::uint64_t m = 0; m < total; ++m) {
                for (std::uint64_t n = m + 1; n < total; ++n) {
                    const bool same_block = m / block == n / block;
                    const bool close = index_distance(m, n, p) <= NormValue::power(static_cast<int>(j));
                    CHECK(same_block == close);
                }
            }
        }
    }
}

TEST_CASE("group operations") {
    const std::uint32_t p = 2;
    CHECK(group_add(0, 5, p) == 5);
    CHECK(group_add(1, 1, p) == 0);
    CHECK(group_add(1, 2, p) == 3);
    CHECK_THROWS_AS(group_add(UltrametricIndex(2, 1), UltrametricIndex(5, 1)),
                    invalid_parameter);

    std::mt19937_64 gen(29);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 300; ++trial) {
            const std::uint64_t a = gen() % 3125, b = gen() % 3125, c = gen() % 3125;
            CHECK(group_add(a, b, q) == oracles::add_by_fractions(a, b, q));
            CHECK(group_add(a, b, q) == group_add(b, a, q));
            CHECK(group_add(group_add(a, b, q), c, q) == group_add(a, group_add(b, c, q), q));
            CHECK(group_add(a, 0, q) == a);
            CHECK(group_sub(group_add(a, b, q), b, q) == a);
            CHECK(group_add(group_sub(a, b, q), b, q) == a);
        }
    }
}

TEST_CASE("norms of nonzero indices have exponent >= 1") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t n = 1 + gen() % 100000;
        CHECK(UltrametricIndex(3, n).norm().exponent() >= 1);
    }
    CHECK(UltrametricIndex(3, 0).norm().is_zero());
}

TEST_CASE("character") {
    CHECK(character(PAdicDigits::zero(5)) == std::complex<double>(1.0, 0.0));

    const auto half = character(PAdicDigits(2, -1, {1})); // frac 1/2
    CHECK(half.real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(half.imag() == doctest::Approx(0.0).epsilon(1e-14));

    const auto three_quarters = character(PAdicDigits(2, -2, {1, 1})); // frac 3/4
    CHECK(three_quarters.real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(three_quarters.imag() == doctest::Approx(-1.0).epsilon(1e-14));

    // unit modulus and multiplicativity through the rational fractional part
    std::mt19937_64 gen(37);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 100; ++trial) {
            const Rational fa(static_cast<std::int64_t>(gen() % 625),
                              static_cast<std::int64_t>(power_of(p, 4)));
            const Rational fb(static_cast<std::int64_t>(gen() % 625),
                              static_cast<std::int64_t>(power_of(p, 4)));
            const auto ca = character(fa);
            const auto cb = character(fb);
            CHECK(std::abs(ca) == doctest::Approx(1.0).epsilon(1e-14));
            const auto prod = ca * cb;
            const auto sum = character(fa + fb);
            CHECK(std::abs(prod - sum) < 1e-13);
        }
    }
}

TEST_CASE("Monna map is 1-Lipschitz") {
    std::mt19937_64 gen(41);
    for (std::uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<std::uint32_t> da(6), db(6);
            for (auto& d : da) d = static_cast<std::uint32_t>(gen() % p);
            for (auto& d : db) d = static_cast<std::uint32_t>(gen() % p);
            const PAdicDigits x(p, -4, da);
            const PAdicDigits y(p, -4, db);
            const Rational diff = x.value() - y.value();
            if (diff.is_zero()) continue;
            const Rational lhs = (monna_real(x) - monna_real(y)).abs();
            const Rational rhs = oracles::rational_norm(diff, p);
            CHECK(lhs <= rhs);
        }
    }
}

TEST_CASE("PAdicDigits canonicalization") {
    // zeros trimmed from both ends, start exponent adjusted
    const PAdicDigits x(3, -2, {0, 2, 1, 0, 0});
    CHECK(x.start_exponent() == -1);
    CHECK(x.digits() == std::vector<std::uint32_t>{2, 1});
    CHECK(x.norm() == NormValue::power(1));

    CHECK(PAdicDigits(3, 5, {}).is_zero());
    CHECK(PAdicDigits(3, 5, {0, 0}).is_zero());
    CHECK(PAdicDigits::zero(3).norm().is_zero());
    CHECK_THROWS_AS(PAdicDigits(3, 0, {3}), invalid_parameter);

    const PAdicDigits nat = PAdicDigits::from_natural(5, 27);
    CHECK(nat.value() == Rational(27));

    CHECK(UltrametricIndex::from_digits(2, {1, 0, 1, 0}).value() == 5);
    CHECK_THROWS_AS(UltrametricIndex::from_digits(2, {2}), invalid_parameter);
}

TEST_CASE("fractional_part strips nonnegative exponents") {
    const PAdicDigits x(2, -2, {1, 1, 1}); // 1/4 + 1/2 + 1
    CHECK(x.fractional_part() == Rational(3, 4));
    CHECK(x.value() == Rational(7, 4));
    CHECK(PAdicDigits::from_natural(2, 9).fractional_part() == Rational(0));
}
