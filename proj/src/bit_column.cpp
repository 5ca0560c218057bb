#include "cipusim/bit_column.hpp"

#include <bit>
#include <stdexcept>

namespace cipusim {

BitColumn::BitColumn(std::size_t size, int position, bool signed_msb)
    : chunks_((size + 63) / 64, 0), size_(size), position_(position), signed_msb_(signed_msb) {}

BitColumn BitColumn::slice(std::span<const FixedPoint> operands, int pos) {
    BitColumn col(operands.size(), pos, pos == 1);
    for (std::size_t t = 0; t < operands.size(); ++t)
        col.set_bit(t, operands[t].bit_at(pos) != 0);
    return col;
}

void BitColumn::set_bit(std::size_t idx, bool value) {
    if (idx >= size_)
        throw std::invalid_argument("bit column index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (idx % 64);
    if (value)
        chunks_[idx / 64] |= mask;
    else
        chunks_[idx / 64] &= ~mask;
}

int BitColumn::bit(std::size_t idx) const {
    if (idx >= size_)
        throw std::invalid_argument("bit column index out of range");
    return static_cast<int>((chunks_[idx / 64] >> (idx % 64)) & 1u);
}

std::int64_t BitColumn::aligned_ones(const BitColumn& other) const {
    std::int64_t count = 0;
    for (std::size_t c = 0; c < chunks_.size(); ++c)
        count += std::popcount(chunks_[c] & other.chunks_[c]);
    return count;
}

PartialProductTerm pp_term(const BitColumn& a_col, const BitColumn& b_col) {
    if (a_col.size() != b_col.size())
        throw std::invalid_argument("bit columns differ in length");
    std::int64_t value = a_col.aligned_ones(b_col);
    if (a_col.signed_msb()) value = -value;
    if (b_col.signed_msb()) value = -value;
    return PartialProductTerm{value, -(a_col.position() + b_col.position())};
}

} // namespace cipusim
