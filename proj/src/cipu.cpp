#include "cipusim/cipu.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cipusim {

void CipuConfig::validate() const {
    if (n < 2 || n > 24)
        throw std::invalid_argument("precision n must be in [2, 24]");
    if (k < 1)
        throw std::invalid_argument("composite width k must be at least 1");
    if (delta_mult < 0)
        throw std::invalid_argument("delta_mult must be non-negative");
    if (register_width() > 58)
        throw std::invalid_argument("n and k exceed the supported register width");
}

int CipuConfig::scale_exponent() const {
    if (overflow == OverflowPolicy::strict) return 0;
    // floor(log2 k) + 1: every k-term sum of products of [-1, 1) operands
    // lands strictly inside (-2^e, 2^e).
    return std::bit_width(static_cast<unsigned>(k));
}

int CipuConfig::register_width() const {
    return 2 * n + std::bit_width(static_cast<unsigned>(2 * k));
}

Digit select_digit(std::int64_t estimate_quarters) {
    if (estimate_quarters >= 2) return 1;
    if (estimate_quarters <= -2) return -1;
    return 0;
}

InnerProductUnit::InnerProductUnit(const CipuConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    ppr_ = CarrySavePair::zero(cfg_.register_width());
    residual_ = CarrySavePair::zero(cfg_.register_width());
}

void InnerProductUnit::admit_row(const CarrySavePair& term) {
    residual_ = compress_6_2(residual_.shifted_left(1), ppr_, term);
    ppr_ = CarrySavePair::zero(cfg_.register_width());
    ++rows_admitted_;
}

void InnerProductUnit::step_input(const BitColumn& a_col, const BitColumn& b_col) {
    if (input_done())
        throw std::logic_error("step_input past the input-consuming phase");
    if (a_col.size() != static_cast<std::size_t>(cfg_.k) || b_col.size() != a_col.size())
        throw std::invalid_argument("bit column length does not match k");

    const int width = cfg_.register_width();
    const std::int64_t term = pp_term(a_col, b_col).value;
    if (cycle_ % cfg_.n == 0) {
        // The boundary cycle's term opens the next row; it enters the
        // residual at half its row weight and the x2 shift of the next
        // admission restores it.
        admit_row(CarrySavePair{term << (cfg_.n - 2), 0, width});
    } else {
        const CarrySavePair zero = CarrySavePair::zero(width);
        ppr_ = compress_6_2(zero, ppr_.shifted_left(1), CarrySavePair{term, 0, width});
    }
    ++cycle_;
}

void InnerProductUnit::emit_one() {
    const int point = 2 * cfg_.n - 2 + cfg_.scale_exponent();
    const CarrySavePair shifted = residual_.shifted_left(1);
    const Digit d = select_digit(shifted.truncated_estimate(point, 2));
    const CarrySavePair zero = CarrySavePair::zero(cfg_.register_width());
    const std::int64_t offset = -static_cast<std::int64_t>(d) << point;
    residual_ = compress_6_2(shifted, zero, CarrySavePair{offset, 0, cfg_.register_width()});
    out_digits_.push_back(d);
    converter_.append(d);
    if (!first_digit_cycle_) first_digit_cycle_ = cycle_;
}

void InnerProductUnit::step_drain() {
    if (!input_done())
        throw std::logic_error("step_drain during the input-consuming phase");
    if (finished())
        throw std::logic_error("stepping a finished unit");
    if (cycle_ == input_cycles())
        admit_row(CarrySavePair::zero(cfg_.register_width()));
    if (cycle_ >= input_cycles() + static_cast<std::uint64_t>(cfg_.delta_mult))
        emit_one();
    ++cycle_;
}

double InnerProductUnit::normalized_residual() const {
    int scale;
    if (rows_admitted_ == 0)
        scale = cfg_.n;
    else if (rows_admitted_ <= cfg_.n)
        scale = cfg_.n + rows_admitted_ - 1;
    else
        scale = 2 * cfg_.n - 2 + cfg_.scale_exponent();
    return std::abs(std::ldexp(static_cast<double>(residual_.value()), -scale));
}

Dyadic InnerProductResult::value() const {
    return reconstruct(digits).scaled_pow2(scale_exponent);
}

InnerProductResult run_inner_product(std::span<const FixedPoint> a,
                                     std::span<const FixedPoint> b,
                                     const CipuConfig& cfg) {
    cfg.validate();
    if (a.size() != static_cast<std::size_t>(cfg.k) || b.size() != a.size())
        throw std::invalid_argument("operand count does not match k");
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].width != cfg.n || b[t].width != cfg.n)
            throw std::invalid_argument("operand width does not match n");

    if (cfg.overflow == OverflowPolicy::strict) {
        std::int64_t abs_sum = 0;
        for (std::size_t t = 0; t < a.size(); ++t)
            abs_sum += std::abs(static_cast<std::int64_t>(a[t].raw) * b[t].raw);
        if (abs_sum >= std::int64_t{1} << (2 * cfg.n - 2))
            throw std::range_error("inner product leaves the fractional range; "
                                   "use auto_scale or rescale the operands");
    }

    std::vector<BitColumn> a_cols, b_cols;
    a_cols.reserve(static_cast<std::size_t>(cfg.n));
    b_cols.reserve(static_cast<std::size_t>(cfg.n));
    for (int pos = 1; pos <= cfg.n; ++pos) {
        a_cols.push_back(BitColumn::slice(a, pos));
        b_cols.push_back(BitColumn::slice(b, pos));
    }

    InnerProductUnit unit(cfg);
    for (std::uint64_t c = 0; c < unit.input_cycles(); ++c)
        unit.step_input(a_cols[c % cfg.n], b_cols[c / cfg.n]);
    while (!unit.finished())
        unit.step_drain();

    if (unit.residual().value() != 0)
        throw std::logic_error("unit finished with a nonzero residual");

    InnerProductResult res;
    res.digits = unit.digits();
    res.scale_exponent = cfg.scale_exponent();
    res.first_digit_cycle = *unit.first_digit_cycle();
    res.total_cycles = unit.cycle();
    return res;
}

InnerProductResult online_multiply(const FixedPoint& a, const FixedPoint& b,
                                   int delta_mult) {
    if (a.width != b.width)
        throw std::invalid_argument("operand widths differ");
    CipuConfig cfg{a.width, 1, delta_mult, OverflowPolicy::auto_scale};
    const FixedPoint av[] = {a};
    const FixedPoint bv[] = {b};
    return run_inner_product(av, bv, cfg);
}

} // namespace cipusim
