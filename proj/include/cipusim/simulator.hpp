#ifndef CIPUSIM_SIMULATOR_HPP
#define CIPUSIM_SIMULATOR_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cipusim/cipu.hpp"
#include "cipusim/layer.hpp"
#include "cipusim/perf_model.hpp"
#include "cipusim/tensor.hpp"

namespace cipusim {

// Exact zero-padded convolution with wide-integer accumulation; the
// functional oracle for the tile simulator. Output integers carry scale
// 2^-(2*(width-1)) relative to the operand values.
AccumTensor reference_conv(const LayerShape& layer, const Tensor& input,
                           const Tensor& weights);

struct LayerSimResult {
    AccumTensor output;
    std::uint64_t measured_cycles = 0;
};

// A T_r x T_c grid of composite inner-product units, each bound to one
// output pixel of the current pass. All bound units step in lockstep, one
// shared cycle per step. Unbound positions stay idle (partial edge tiles).
class PeGrid {
public:
    PeGrid(const TileConfig& tile, const CipuConfig& unit_cfg);

    int size() const { return rows_ * cols_; }

    // Bind the unit at grid position pe to an operand pair of the
    // configured composite width.
    void bind(int pe, std::vector<FixedPoint> a, std::vector<FixedPoint> b);

    // Drive every bound unit through its full run under a common cycle
    // barrier; returns each bound unit's exact inner product scaled to
    // 2^-scale_log2 integers, indexed by grid position.
    std::vector<std::int64_t> run_pass(int scale_log2);

private:
    struct Slot {
        std::vector<BitColumn> a_cols;
        std::vector<BitColumn> b_cols;
    };

    int rows_ = 0, cols_ = 0;
    CipuConfig unit_cfg_;
    std::vector<Slot> slots_;
    std::vector<bool> bound_;
};

// Digit-level tile simulation. Every PE of the T_r x T_c grid runs one
// composite inner-product unit of width kernel^2 * T_n per input-channel
// group; channel-group partial sums accumulate into the output pixel.
// Cycle accounting charges (n^2 + delta_mult) per channel group plus
// kernel^2 reduction stages per grid pass, matching cycles_layer exactly.
LayerSimResult simulate_layer(const LayerShape& layer, const Tensor& input,
                              const Tensor& weights, const TileConfig& tile,
                              const CipuConfig& cfg);

enum class SimMode { digit_level, analytic };

struct NetworkLayerResult {
    std::string name;
    bool digit_level = false;   // false: analytic closed-form cycles
    bool oracle_match = false;  // digit-level output equals reference_conv
    std::uint64_t cycles = 0;
};

struct NetworkSimResult {
    std::vector<NetworkLayerResult> layers;
    std::uint64_t total_cycles = 0;
};

// Per-layer simulation over deterministic seeded tensors. Layers whose
// R*C*N*M product exceeds the budget fall back to analytic cycles when
// allowed; otherwise the run is refused.
NetworkSimResult simulate_network(std::span<const LayerShape> layers,
                                  const CipuConfig& cfg, const TileConfig& tile,
                                  SimMode mode, std::uint64_t budget,
                                  std::uint64_t seed);

// Deterministic full-range test tensors for a layer.
Tensor random_feature_map(const LayerShape& layer, int width, std::uint64_t seed);
Tensor random_kernels(const LayerShape& layer, int width, std::uint64_t seed);

} // namespace cipusim

#endif
