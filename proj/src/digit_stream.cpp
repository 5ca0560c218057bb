#include "cipusim/digit_stream.hpp"

#include <stdexcept>

namespace cipusim {

namespace {
constexpr int kMaxStreamDigits = 62;

void check_length(std::size_t len) {
    if (len > kMaxStreamDigits)
        throw std::invalid_argument("digit stream longer than 62 digits");
}
} // namespace

Dyadic::Dyadic(std::int64_t num_, int log2_den_) : num(num_), log2_den(log2_den_) {
    if (log2_den < 0)
        throw std::invalid_argument("dyadic denominator exponent must be non-negative");
    while (num != 0 && (num & 1) == 0 && log2_den > 0) {
        num >>= 1;
        --log2_den;
    }
    if (num == 0) log2_den = 0;
}

double Dyadic::to_double() const {
    return static_cast<double>(num) / static_cast<double>(std::int64_t{1} << log2_den);
}

Dyadic Dyadic::scaled_pow2(int exponent) const {
    if (exponent >= 0) {
        const int drop = exponent < log2_den ? exponent : log2_den;
        return Dyadic(num << (exponent - drop), log2_den - drop);
    }
    return Dyadic(num, log2_den - exponent);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const int den = a.log2_den > b.log2_den ? a.log2_den : b.log2_den;
    const std::int64_t an = a.num << (den - a.log2_den);
    const std::int64_t bn = b.num << (den - b.log2_den);
    return Dyadic(an + bn, den);
}

bool digits_valid(const DigitStream& s) {
    for (Digit d : s)
        if (d < -1 || d > 1) return false;
    return true;
}

Dyadic reconstruct(const DigitStream& s) {
    check_length(s.size());
    if (!digits_valid(s))
        throw std::invalid_argument("digit outside {-1, 0, +1}");
    std::int64_t acc = 0;
    for (Digit d : s) acc = (acc << 1) + d;
    return Dyadic(acc, static_cast<int>(s.size()));
}

DigitStream to_digit_stream(const FixedPoint& v) {
    const int n = v.width;
    // Recode 2*raw greedily from the top; representable iff |2*raw| <= 2^n - 1.
    std::int64_t rem = 2 * static_cast<std::int64_t>(v.raw);
    if (rem <= -(std::int64_t{1} << n))
        throw std::domain_error("value -1 has no finite signed-digit stream in (-1, 1)");
    DigitStream out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const std::int64_t w = std::int64_t{1} << (n - i);
        Digit d = 0;
        if (rem >= w) d = 1;
        else if (rem <= -w) d = -1;
        rem -= d * w;
        out.push_back(d);
    }
    if (rem != 0)
        throw std::logic_error("digit recoding left a nonzero remainder");
    return out;
}

void OtfConverter::append(Digit d) {
    if (d < -1 || d > 1)
        throw std::invalid_argument("digit outside {-1, 0, +1}");
    check_length(static_cast<std::size_t>(len_) + 1);
    // q' = 2q + d and qm' = q' - 1, each picked from whichever of q / q-1
    // avoids a borrow across the prefix.
    std::int64_t q_next, qm_next;
    switch (d) {
        case 1:  q_next = 2 * q_ + 1;  qm_next = 2 * q_;       break;
        case 0:  q_next = 2 * q_;      qm_next = 2 * qm_ + 1;  break;
        default: q_next = 2 * qm_ + 1; qm_next = 2 * qm_;      break;
    }
    q_ = q_next;
    qm_ = qm_next;
    ++len_;
}

Dyadic OtfConverter::exact_value() const { return Dyadic(q_, len_); }

FixedPoint OtfConverter::to_fixed_point(int width) const {
    if (width < 2 || width > 24)
        throw std::invalid_argument("conversion width must be in [2, 24]");
    std::int64_t raw;
    if (len_ >= width - 1)
        raw = q_ / (std::int64_t{1} << (len_ - (width - 1))); // toward zero
    else
        raw = q_ << ((width - 1) - len_);
    return FixedPoint(static_cast<std::int32_t>(raw), width);
}

FixedPoint on_the_fly_convert(const DigitStream& s, int width) {
    OtfConverter conv;
    for (Digit d : s) conv.append(d);
    return conv.to_fixed_point(width);
}

} // namespace cipusim
