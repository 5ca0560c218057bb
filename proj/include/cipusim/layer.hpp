#ifndef CIPUSIM_LAYER_HPP
#define CIPUSIM_LAYER_HPP

#include <cstdint>
#include <string>

namespace cipusim {

// Convolution layer geometry. R and C are output feature-map dimensions;
// the input feature map size follows from stride, kernel and padding.
struct LayerShape {
    std::string name;
    int out_rows = 1;    // R
    int out_cols = 1;    // C
    int in_channels = 1; // N
    int out_channels = 1; // M
    int kernel = 1;      // k, kernel side
    int stride = 1;
    int padding = 0;

    int in_rows() const { return (out_rows - 1) * stride + kernel - 2 * padding; }
    int in_cols() const { return (out_cols - 1) * stride + kernel - 2 * padding; }

    void validate() const;
};

// Work partitioning across the PE array and time.
struct TileConfig {
    int t_n = 8; // input channels per composite unit pass
    int t_r = 8; // PE-grid rows
    int t_c = 8; // PE-grid columns
    int t_m = 1; // output channels per pass

    void validate() const;
};

// Iteration space of one layer: output-channel groups outermost, spatial
// tiles next, input-channel groups innermost. Spatial tiles cover the
// R*C output pixels in flat raster order, T_r*T_c pixels per pass; a
// partial final tile still occupies a full pass.
struct LayerSchedule {
    std::uint64_t out_channel_groups = 0; // ceil(M / T_m)
    std::uint64_t spatial_tiles = 0;      // ceil(R*C / (T_r*T_c))
    std::uint64_t in_channel_groups = 0;  // ceil(N / T_n)

    std::uint64_t leaf_units() const {
        return out_channel_groups * spatial_tiles * in_channel_groups;
    }
};

LayerSchedule schedule_layer(const LayerShape& layer, const TileConfig& tile);

} // namespace cipusim

#endif
