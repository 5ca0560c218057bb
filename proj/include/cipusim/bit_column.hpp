#ifndef CIPUSIM_BIT_COLUMN_HPP
#define CIPUSIM_BIT_COLUMN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cipusim/fixed_point.hpp"

namespace cipusim {

// One digit position sliced across a vector of operands: entry t is the bit
// of operand t at MSDF position `position`. signed_msb marks the
// two's-complement sign position, which carries negative weight.
class BitColumn {
public:
    BitColumn() = default;
    BitColumn(std::size_t size, int position, bool signed_msb);

    // Column at MSDF position pos (1-based) of a whole operand vector.
    static BitColumn slice(std::span<const FixedPoint> operands, int pos);

    static BitColumn zeros(std::size_t size) { return BitColumn(size, 0, false); }

    void set_bit(std::size_t idx, bool value);
    int bit(std::size_t idx) const;

    std::size_t size() const { return size_; }
    int position() const { return position_; }
    bool signed_msb() const { return signed_msb_; }

    // Count of positions where both columns have a one bit.
    std::int64_t aligned_ones(const BitColumn& other) const;

private:
    std::vector<std::uint64_t> chunks_;
    std::size_t size_ = 0;
    int position_ = 0;
    bool signed_msb_ = false;
};

// A sign-weighted partial-product term: value in [-k, k] produced by the
// counter circuit, destined for weight 2^weight_exponent.
struct PartialProductTerm {
    std::int64_t value = 0;
    int weight_exponent = 0;
};

// Counter circuit: sum of a_t * b_t across the column, negated once per
// signed_msb flag (two flags compose back to positive).
PartialProductTerm pp_term(const BitColumn& a_col, const BitColumn& b_col);

} // namespace cipusim

#endif
