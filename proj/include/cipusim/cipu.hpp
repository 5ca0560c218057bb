#ifndef CIPUSIM_CIPU_HPP
#define CIPUSIM_CIPU_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "cipusim/bit_column.hpp"
#include "cipusim/carry_save.hpp"
#include "cipusim/digit_stream.hpp"
#include "cipusim/fixed_point.hpp"

namespace cipusim {

// How a composite unit handles sums that leave the fractional range.
// strict: require sum(|a_t * b_t|) < 1, range error otherwise, no scaling.
// auto_scale: output digits carry value * 2^-e with e = floor(log2 k) + 1,
// which holds every possible k-term sum strictly inside (-1, 1).
enum class OverflowPolicy { strict, auto_scale };

struct CipuConfig {
    int n = 8;          // operand precision, bits (includes the sign position)
    int k = 1;          // multiplications merged into the composite unit
    int delta_mult = 3; // online delay of the multiplier stage, cycles
    OverflowPolicy overflow = OverflowPolicy::strict;

    void validate() const;

    int delta_ip() const { return n * n + delta_mult; }
    int scale_exponent() const;
    int output_digit_count() const { return 2 * n + scale_exponent(); }
    // 2n bits plus guard room for the counter range [-k, k] per position.
    int register_width() const;
    std::uint64_t total_cycles() const {
        return static_cast<std::uint64_t>(delta_ip()) + output_digit_count();
    }
};

// Threshold selection over a truncated residual estimate given in quarter
// units (two fractional bits): +1 at or above 1/2, -1 at or below -1/2.
Digit select_digit(std::int64_t estimate_quarters);

// Cycle-accurate composite inner-product unit.
//
// Cycles [0, n^2) consume one bit column pair per cycle, position
// i = (c mod n)+1 of the first operand against j = (c div n)+1 of the
// second. The PPR register left-shift-accumulates the terms of one row;
// at every cycle c = 0 (mod n) the residual register admits the finished
// row and the PPR is reset through its zero multiplexer. The term arriving
// on a boundary cycle opens the next row and enters the residual at half
// its row weight (2^(n-2)); the residual's x2 shift at the following
// boundary restores it. A single 6:2 compressor performs every addition.
//
// Cycle n^2 flushes the last row, and after delta_mult further cycles the
// unit emits one output digit per cycle, selected from the two leading
// fractional bits of the (shifted) residual.
class InnerProductUnit {
public:
    explicit InnerProductUnit(const CipuConfig& cfg);

    // One input-phase cycle. Columns must have k entries each.
    void step_input(const BitColumn& a_col, const BitColumn& b_col);

    // One post-input cycle: the last-row flush, a multiplier-delay wait,
    // or an output-digit emission.
    void step_drain();

    bool input_done() const { return cycle_ >= input_cycles(); }
    bool finished() const { return cycle_ >= cfg_.total_cycles(); }

    std::uint64_t cycle() const { return cycle_; }
    std::uint64_t input_cycles() const { return static_cast<std::uint64_t>(cfg_.n) * cfg_.n; }

    const CarrySavePair& ppr() const { return ppr_; }
    const CarrySavePair& residual() const { return residual_; }
    const DigitStream& digits() const { return out_digits_; }
    const OtfConverter& converter() const { return converter_; }
    const CipuConfig& config() const { return cfg_; }
    std::optional<std::uint64_t> first_digit_cycle() const { return first_digit_cycle_; }

    // Residual magnitude relative to the weight of the position currently
    // being accumulated or emitted; stays below 2k throughout a run.
    double normalized_residual() const;

private:
    void admit_row(const CarrySavePair& term);
    void emit_one();

    CipuConfig cfg_;
    CarrySavePair ppr_;
    CarrySavePair residual_;
    std::uint64_t cycle_ = 0;
    int rows_admitted_ = 0;
    DigitStream out_digits_;
    OtfConverter converter_;
    std::optional<std::uint64_t> first_digit_cycle_;
};

struct InnerProductResult {
    DigitStream digits;
    int scale_exponent = 0;
    std::uint64_t first_digit_cycle = 0;
    std::uint64_t total_cycles = 0;

    // reconstruct(digits) * 2^scale_exponent, the exact inner product.
    Dyadic value() const;
};

// Drives a full run: sum of a_t * b_t over k operand pairs.
InnerProductResult run_inner_product(std::span<const FixedPoint> a,
                                     std::span<const FixedPoint> b,
                                     const CipuConfig& cfg);

// k = 1 special case. Scaled output (exponent 1) so that the full signed
// range is exact, including (-1) * (-1) = +1.
InnerProductResult online_multiply(const FixedPoint& a, const FixedPoint& b,
                                   int delta_mult = 3);

} // namespace cipusim

#endif
