#include "cipusim/carry_save.hpp"

#include <stdexcept>

namespace cipusim {

std::int64_t signed_wrap(std::int64_t x, int width) {
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    std::uint64_t u = static_cast<std::uint64_t>(x) & mask;
    if (u >> (width - 1)) u |= ~mask; // sign extend
    return static_cast<std::int64_t>(u);
}

namespace {

// 3:2 reduction on width-bit words; carries out of the top are dropped.
void csa(std::int64_t a, std::int64_t b, std::int64_t c, int width,
         std::int64_t& sum, std::int64_t& carry) {
    sum = signed_wrap(a ^ b ^ c, width);
    carry = signed_wrap(((a & b) | (a & c) | (b & c)) << 1, width);
}

} // namespace

CarrySavePair CarrySavePair::shifted_left(int amount) const {
    return CarrySavePair{signed_wrap(sum << amount, width),
                         signed_wrap(carry << amount, width), width};
}

std::int64_t CarrySavePair::truncated_estimate(int point_exp, int frac_bits) const {
    const int shift = point_exp - frac_bits;
    if (shift < 0 || shift >= width)
        throw std::invalid_argument("estimate window outside the register");
    return signed_wrap((sum >> shift) + (carry >> shift), width - shift);
}

CarrySavePair compress_6_2(const CarrySavePair& residual,
                           const CarrySavePair& ppr,
                           const CarrySavePair& term) {
    const int width = residual.width;
    if (ppr.width != width || term.width != width)
        throw std::invalid_argument("compressor operand widths differ");

    const std::int64_t total = residual.value() + ppr.value() + term.value();
    const std::int64_t bound = std::int64_t{1} << (width - 1);
    if (total < -bound || total >= bound)
        throw std::range_error("carry-save value overflows the register width");

    std::int64_t s1, c1, s2, c2, s3, c3, s4, c4;
    csa(signed_wrap(residual.sum, width), signed_wrap(residual.carry, width),
        signed_wrap(ppr.sum, width), width, s1, c1);
    csa(s1, c1, signed_wrap(ppr.carry, width), width, s2, c2);
    csa(s2, c2, signed_wrap(term.sum, width), width, s3, c3);
    csa(s3, c3, signed_wrap(term.carry, width), width, s4, c4);
    return CarrySavePair{s4, c4, width};
}

} // namespace cipusim
