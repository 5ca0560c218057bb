#ifndef CIPUSIM_CARRY_SAVE_HPP
#define CIPUSIM_CARRY_SAVE_HPP

#include <cstdint>

namespace cipusim {

// Two's-complement wrap of x to a signed w-bit word.
std::int64_t signed_wrap(std::int64_t x, int width);

// A value held as two width-bit words whose (modular) sum is the
// represented value, so per-cycle additions never propagate carries.
// Carries out of the register top are dropped exactly as fixed-width
// hardware drops them; the value is recovered correctly as long as it
// stays below 2^(width-1) in magnitude, which compress_6_2 enforces.
struct CarrySavePair {
    std::int64_t sum = 0;
    std::int64_t carry = 0;
    int width = 0;

    static CarrySavePair zero(int width) { return CarrySavePair{0, 0, width}; }

    std::int64_t value() const { return signed_wrap(sum + carry, width); }

    CarrySavePair shifted_left(int amount) const;

    // Window adder over the top of both words: each word arithmetically
    // shifted down to frac_bits fractional positions below 2^point_exp,
    // added modulo the window. Never exceeds the true value and
    // undershoots by less than 2 * 2^-frac_bits.
    std::int64_t truncated_estimate(int point_exp, int frac_bits) const;
};

// Exact three-addend carry-save addition (the 6:2 reduction: three
// two-word operands in, one two-word result out). Throws if the true
// result value does not fit the shared width.
CarrySavePair compress_6_2(const CarrySavePair& residual,
                           const CarrySavePair& ppr,
                           const CarrySavePair& term);

} // namespace cipusim

#endif
