#include "cipusim/layer.hpp"

#include <stdexcept>

namespace cipusim {

namespace {
std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }
} // namespace

void LayerShape::validate() const {
    if (out_rows < 1 || out_cols < 1 || in_channels < 1 || out_channels < 1 ||
        kernel < 1 || stride < 1 || padding < 0)
        throw std::invalid_argument("layer '" + name + "': all dimensions must be positive");
    if (in_rows() < 1 || in_cols() < 1)
        throw std::invalid_argument("layer '" + name + "': derived input size is empty");
}

void TileConfig::validate() const {
    if (t_n < 1 || t_r < 1 || t_c < 1 || t_m < 1)
        throw std::invalid_argument("tile sizes must be positive");
}

LayerSchedule schedule_layer(const LayerShape& layer, const TileConfig& tile) {
    layer.validate();
    tile.validate();
    LayerSchedule s;
    s.out_channel_groups = ceil_div(layer.out_channels, tile.t_m);
    s.spatial_tiles = ceil_div(static_cast<std::uint64_t>(layer.out_rows) * layer.out_cols,
                               static_cast<std::uint64_t>(tile.t_r) * tile.t_c);
    s.in_channel_groups = ceil_div(layer.in_channels, tile.t_n);
    return s;
}

} // namespace cipusim
