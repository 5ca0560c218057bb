#ifndef CIPUSIM_DIGIT_STREAM_HPP
#define CIPUSIM_DIGIT_STREAM_HPP

#include <cstdint>
#include <vector>

#include "cipusim/fixed_point.hpp"

namespace cipusim {

// Radix-2 signed digit, one of {-1, 0, +1}.
using Digit = std::int8_t;

// MSDF-ordered digit sequence; position i (1-based) carries weight 2^-i,
// so any finite stream reconstructs to a value strictly inside (-1, 1).
using DigitStream = std::vector<Digit>;

// Exact dyadic rational num / 2^log2_den, kept in canonical form
// (odd numerator unless zero).
struct Dyadic {
    std::int64_t num = 0;
    int log2_den = 0;

    Dyadic() = default;
    Dyadic(std::int64_t num_, int log2_den_);

    double to_double() const;
    Dyadic scaled_pow2(int exponent) const; // value * 2^exponent
    bool operator==(const Dyadic&) const = default;
};

Dyadic operator+(const Dyadic& a, const Dyadic& b);

// Sum of d_i * 2^-i over the stream, exact.
Dyadic reconstruct(const DigitStream& s);

// n signed digits reconstructing raw / 2^(n-1) exactly. The most negative
// raw (-2^(n-1), value -1) has no finite stream inside (-1, 1) and is a
// domain error.
DigitStream to_digit_stream(const FixedPoint& v);

bool digits_valid(const DigitStream& s);

// Incremental redundant-to-conventional converter. Keeps the two candidate
// prefixes q and q-1 so appending a digit never revisits earlier digits.
class OtfConverter {
public:
    void append(Digit d);

    int digits_seen() const { return len_; }

    // Prefix value truncated toward zero to an n-bit fixed point.
    FixedPoint to_fixed_point(int width) const;

    Dyadic exact_value() const;

private:
    std::int64_t q_ = 0;  // sum of d_i * 2^(len-i)
    std::int64_t qm_ = -1; // q_ - 1, maintained digit by digit
    int len_ = 0;
};

// Converts a whole stream; equals reconstruct(s) truncated toward zero
// to width fractional steps of 2^-(width-1).
FixedPoint on_the_fly_convert(const DigitStream& s, int width);

} // namespace cipusim

#endif
