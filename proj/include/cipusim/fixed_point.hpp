#ifndef CIPUSIM_FIXED_POINT_HPP
#define CIPUSIM_FIXED_POINT_HPP

#include <cstdint>
#include <stdexcept>

namespace cipusim {

// Fractional two's-complement fixed point. An n-bit value holds
// raw in [-2^(n-1), 2^(n-1)) and represents raw / 2^(n-1) in [-1, 1).
struct FixedPoint {
    std::int32_t raw = 0;
    int width = 8;

    FixedPoint() = default;
    FixedPoint(std::int32_t raw_, int width_);

    double value() const {
        return static_cast<double>(raw) / static_cast<double>(std::int64_t{1} << (width - 1));
    }

    // Bit of the two's-complement pattern at MSDF position pos (1 = MSB/sign, width = LSB).
    int bit_at(int pos) const;

    bool operator==(const FixedPoint&) const = default;
};

// Nearest n-bit fixed-point value, ties to even, clamped to the raw range.
// Accepts x in [-1, 1); anything else is a range error.
FixedPoint quantize(double x, int width);

} // namespace cipusim

#endif
