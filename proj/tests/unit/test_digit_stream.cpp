#include <doctest.h>

#include <random>

#include "cipusim/digit_stream.hpp"

using namespace cipusim;

TEST_CASE("reconstruct weighted sums") {
    CHECK(reconstruct({1}) == Dyadic(1, 1));
    CHECK(reconstruct({1, -1}) == Dyadic(1, 2));
    CHECK(reconstruct({0, 1, 1, -1}) == Dyadic(5, 4)); // 1/4 + 1/8 - 1/16
    CHECK(reconstruct({}) == Dyadic(0, 0));
}

TEST_CASE("dyadic values are canonical") {
    CHECK(Dyadic(2, 3) == Dyadic(1, 2));
    CHECK(Dyadic(0, 7) == Dyadic(0, 0));
    CHECK(Dyadic(3, 4).scaled_pow2(2) == Dyadic(3, 2));
    CHECK(Dyadic(3, 1).scaled_pow2(-2) == Dyadic(3, 3));
    CHECK(Dyadic(1, 2) + Dyadic(1, 4) == Dyadic(5, 4));
}

TEST_CASE("to_digit_stream power-of-two and zero cases") {
    const DigitStream half = to_digit_stream(FixedPoint(64, 8));
    CHECK(half == DigitStream{1, 0, 0, 0, 0, 0, 0, 0});
    const DigitStream zero = to_digit_stream(FixedPoint(0, 8));
    CHECK(zero == DigitStream(8, 0));
}

TEST_CASE("to_digit_stream reconstructs negative values exactly") {
    const DigitStream s = to_digit_stream(FixedPoint(-38, 8));
    CHECK(s.size() == 8);
    CHECK(reconstruct(s) == Dyadic(-38, 7));
}

TEST_CASE("value -1 has no stream") {
    CHECK_THROWS_AS(to_digit_stream(FixedPoint(-128, 8)), std::domain_error);
}

TEST_CASE("round trip is exact for every representable value, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        const int half = 1 << (n - 1);
        for (int raw = -half + 1; raw < half; ++raw) {
            const DigitStream s = to_digit_stream(FixedPoint(raw, n));
            CHECK(s.size() == static_cast<std::size_t>(n));
            CHECK(digits_valid(s));
            CHECK(reconstruct(s) == Dyadic(raw, n - 1));
        }
    }
}

TEST_CASE("on_the_fly_convert simple cases") {
    CHECK(on_the_fly_convert({1, 0, 0, 0, 0, 0, 0, 0}, 8) == FixedPoint(64, 8));
    CHECK(on_the_fly_convert(DigitStream(8, 0), 8) == FixedPoint(0, 8));
}

TEST_CASE("on_the_fly_convert equals reconstruct-then-truncate") {
    std::mt19937_64 eng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + static_cast<int>(eng() % 7);
        const int len = static_cast<int>(eng() % (2 * n + 1));
        DigitStream s;
        for (int t = 0; t < len; ++t)
            s.push_back(static_cast<Digit>(static_cast<int>(eng() % 3) - 1));
        const FixedPoint got = on_the_fly_convert(s, n);

        const Dyadic exact = reconstruct(s);
        // Truncate toward zero at steps of 2^-(n-1).
        std::int64_t scaled_num = exact.num;
        int den = exact.log2_den;
        std::int64_t raw;
        if (den <= n - 1) {
            raw = scaled_num << ((n - 1) - den);
        } else {
            const std::int64_t div = std::int64_t{1} << (den - (n - 1));
            raw = scaled_num / div; // toward zero
        }
        CHECK(got == FixedPoint(static_cast<std::int32_t>(raw), n));
    }
}

TEST_CASE("converter is incremental") {
    // Appending digit t never changes what earlier digits contributed:
    // converting a prefix then continuing equals converting the whole.
    std::mt19937_64 eng(7);
    for (int trial = 0; trial < 200; ++trial) {
        DigitStream s;
        const int len = 1 + static_cast<int>(eng() % 16);
        for (int t = 0; t < len; ++t)
            s.push_back(static_cast<Digit>(static_cast<int>(eng() % 3) - 1));
        OtfConverter inc;
        for (Digit d : s) inc.append(d);
        CHECK(inc.exact_value() == reconstruct(s));
    }
}

TEST_CASE("reconstruct rejects digits outside the alphabet") {
    DigitStream bad{1, 2};
    CHECK_THROWS_AS(reconstruct(bad), std::invalid_argument);
}
