#include "cipusim/fixed_point.hpp"

#include <cmath>
#include <string>

namespace cipusim {

FixedPoint::FixedPoint(std::int32_t raw_, int width_) : raw(raw_), width(width_) {
    if (width < 1 || width > 24)
        throw std::invalid_argument("fixed point width must be in [1, 24]");
    const std::int64_t bound = std::int64_t{1} << (width - 1);
    if (raw < -bound || raw >= bound)
        throw std::invalid_argument("fixed point raw value out of range for width " +
                                    std::to_string(width));
}

int FixedPoint::bit_at(int pos) const {
    if (pos < 1 || pos > width)
        throw std::invalid_argument("bit position out of range");
    const auto pattern = static_cast<std::uint32_t>(raw);
    return static_cast<int>((pattern >> (width - pos)) & 1u);
}

FixedPoint quantize(double x, int width) {
    if (width < 2 || width > 24)
        throw std::invalid_argument("quantize width must be in [2, 24]");
    if (!(x >= -1.0 && x < 1.0))
        throw std::domain_error("quantize input must lie in [-1, 1)");
    const double scaled = std::ldexp(x, width - 1);
    // Ties to even; rint honours the default FE_TONEAREST mode.
    auto rounded = static_cast<std::int64_t>(std::rint(scaled));
    const std::int64_t bound = std::int64_t{1} << (width - 1);
    if (rounded < -bound) rounded = -bound;
    if (rounded > bound - 1) rounded = bound - 1;
    return FixedPoint(static_cast<std::int32_t>(rounded), width);
}

} // namespace cipusim
