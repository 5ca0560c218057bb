#include "cipusim/simulator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace cipusim {

namespace {

void check_layer_tensors(const LayerShape& layer, const Tensor& input,
                         const Tensor& weights) {
    layer.validate();
    const std::vector<int> want_in{layer.in_channels, layer.in_rows(), layer.in_cols()};
    const std::vector<int> want_w{layer.out_channels, layer.in_channels, layer.kernel,
                                  layer.kernel};
    if (input.dims() != want_in)
        throw std::invalid_argument("layer '" + layer.name + "': input tensor shape mismatch");
    if (weights.dims() != want_w)
        throw std::invalid_argument("layer '" + layer.name + "': weight tensor shape mismatch");
    if (input.width() != weights.width())
        throw std::invalid_argument("input and weight precisions differ");
}

// Recovers the wide-integer accumulator value from an exact digit-stream
// result: value * 2^scale_log2 must be an integer.
std::int64_t to_scaled_int(const Dyadic& v, int scale_log2) {
    if (v.log2_den > scale_log2)
        throw std::logic_error("inner product finer than the accumulator scale");
    return v.num << (scale_log2 - v.log2_den);
}

std::vector<BitColumn> slice_all(std::span<const FixedPoint> operands, int n) {
    std::vector<BitColumn> cols;
    cols.reserve(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= n; ++pos)
        cols.push_back(BitColumn::slice(operands, pos));
    return cols;
}

Tensor random_tensor(std::vector<int> dims, int width, std::uint64_t seed) {
    Tensor t(std::move(dims), width);
    std::mt19937_64 eng(seed);
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    const std::int32_t half = std::int32_t{1} << (width - 1);
    for (auto& raw : t.raw())
        raw = static_cast<std::int32_t>(eng() & mask) - half;
    return t;
}

} // namespace

AccumTensor reference_conv(const LayerShape& layer, const Tensor& input,
                           const Tensor& weights) {
    check_layer_tensors(layer, input, weights);
    AccumTensor out(layer.out_channels, layer.out_rows, layer.out_cols,
                    2 * (input.width() - 1));
    for (int m = 0; m < layer.out_channels; ++m)
        for (int r = 0; r < layer.out_rows; ++r)
            for (int c = 0; c < layer.out_cols; ++c) {
                std::int64_t acc = 0;
                for (int ch = 0; ch < layer.in_channels; ++ch)
                    for (int kr = 0; kr < layer.kernel; ++kr)
                        for (int kc = 0; kc < layer.kernel; ++kc) {
                            const int ir = r * layer.stride + kr - layer.padding;
                            const int ic = c * layer.stride + kc - layer.padding;
                            acc += static_cast<std::int64_t>(input.padded(ch, ir, ic)) *
                                   weights.at(m, ch, kr, kc);
                        }
                out.at(m, r, c) = acc;
            }
    return out;
}

PeGrid::PeGrid(const TileConfig& tile, const CipuConfig& unit_cfg)
    : rows_(tile.t_r), cols_(tile.t_c), unit_cfg_(unit_cfg) {
    tile.validate();
    unit_cfg_.validate();
    slots_.resize(static_cast<std::size_t>(size()));
    bound_.assign(static_cast<std::size_t>(size()), false);
}

void PeGrid::bind(int pe, std::vector<FixedPoint> a, std::vector<FixedPoint> b) {
    if (pe < 0 || pe >= size())
        throw std::invalid_argument("grid position out of range");
    if (a.size() != static_cast<std::size_t>(unit_cfg_.k) || b.size() != a.size())
        throw std::invalid_argument("operand count does not match the composite width");
    slots_[pe] = Slot{slice_all(a, unit_cfg_.n), slice_all(b, unit_cfg_.n)};
    bound_[pe] = true;
}

std::vector<std::int64_t> PeGrid::run_pass(int scale_log2) {
    const int n = unit_cfg_.n;
    std::vector<int> active;
    std::vector<InnerProductUnit> units;
    for (int pe = 0; pe < size(); ++pe)
        if (bound_[pe]) {
            active.push_back(pe);
            units.emplace_back(unit_cfg_);
        }

    const std::uint64_t input_cycles = static_cast<std::uint64_t>(n) * n;
    for (std::uint64_t c = 0; c < unit_cfg_.total_cycles(); ++c)
        for (std::size_t idx = 0; idx < active.size(); ++idx) {
            if (c < input_cycles) {
                const Slot& slot = slots_[active[idx]];
                units[idx].step_input(slot.a_cols[c % n], slot.b_cols[c / n]);
            } else {
                units[idx].step_drain();
            }
        }

    std::vector<std::int64_t> out(static_cast<std::size_t>(size()), 0);
    for (std::size_t idx = 0; idx < active.size(); ++idx) {
        if (units[idx].residual().value() != 0)
            throw std::logic_error("unit finished with a nonzero residual");
        const Dyadic v =
            reconstruct(units[idx].digits()).scaled_pow2(unit_cfg_.scale_exponent());
        out[active[idx]] = to_scaled_int(v, scale_log2);
    }
    bound_.assign(bound_.size(), false);
    return out;
}

LayerSimResult simulate_layer(const LayerShape& layer, const Tensor& input,
                              const Tensor& weights, const TileConfig& tile,
                              const CipuConfig& cfg) {
    check_layer_tensors(layer, input, weights);
    tile.validate();
    if (input.width() != cfg.n)
        throw std::invalid_argument("tensor precision does not match the unit configuration");

    const LayerSchedule sched = schedule_layer(layer, tile);
    const int kk = layer.kernel * layer.kernel;
    const int composite_k = kk * tile.t_n;
    CipuConfig unit_cfg{cfg.n, composite_k, cfg.delta_mult, OverflowPolicy::auto_scale};
    unit_cfg.validate();

    const std::uint64_t unit_delay = delta_ip(cfg.n, cfg.delta_mult);
    const std::uint64_t total_pixels =
        static_cast<std::uint64_t>(layer.out_rows) * layer.out_cols;

    LayerSimResult result;
    result.output = AccumTensor(layer.out_channels, layer.out_rows, layer.out_cols,
                                2 * (cfg.n - 1));

    std::vector<FixedPoint> a_vec(static_cast<std::size_t>(composite_k), FixedPoint(0, cfg.n));
    std::vector<FixedPoint> b_vec(static_cast<std::size_t>(composite_k), FixedPoint(0, cfg.n));
    PeGrid grid(tile, unit_cfg);

    for (std::uint64_t mg = 0; mg < sched.out_channel_groups; ++mg) {
        const int m_begin = static_cast<int>(mg) * tile.t_m;
        const int m_end = std::min(layer.out_channels, m_begin + tile.t_m);
        for (std::uint64_t t = 0; t < sched.spatial_tiles; ++t) {
            // Adder-tree reduction stages for the k x k window, once per pass.
            result.measured_cycles += static_cast<std::uint64_t>(kk) * unit_delay;
            for (std::uint64_t g = 0; g < sched.in_channel_groups; ++g) {
                result.measured_cycles += unit_delay;
                const int ch_begin = static_cast<int>(g) * tile.t_n;
                for (int m = m_begin; m < m_end; ++m) {
                    // Kernel operands for this pass; idle entries (channels
                    // past N) stay zero.
                    for (int cl = 0; cl < tile.t_n; ++cl)
                        for (int kr = 0; kr < layer.kernel; ++kr)
                            for (int kc = 0; kc < layer.kernel; ++kc) {
                                const int ch = ch_begin + cl;
                                const std::int32_t raw = ch < layer.in_channels
                                                             ? weights.at(m, ch, kr, kc)
                                                             : 0;
                                b_vec[(static_cast<std::size_t>(cl) * kk) +
                                      static_cast<std::size_t>(kr) * layer.kernel + kc] =
                                    FixedPoint(raw, cfg.n);
                            }
                    for (int pe = 0; pe < grid.size(); ++pe) {
                        const std::uint64_t pixel = t * grid.size() + pe;
                        if (pixel >= total_pixels) break; // idle PEs of a partial tile
                        const int r = static_cast<int>(pixel / layer.out_cols);
                        const int c = static_cast<int>(pixel % layer.out_cols);
                        for (int cl = 0; cl < tile.t_n; ++cl)
                            for (int kr = 0; kr < layer.kernel; ++kr)
                                for (int kc = 0; kc < layer.kernel; ++kc) {
                                    const int ch = ch_begin + cl;
                                    const int ir = r * layer.stride + kr - layer.padding;
                                    const int ic = c * layer.stride + kc - layer.padding;
                                    const std::int32_t raw = ch < layer.in_channels
                                                                 ? input.padded(ch, ir, ic)
                                                                 : 0;
                                    a_vec[(static_cast<std::size_t>(cl) * kk) +
                                          static_cast<std::size_t>(kr) * layer.kernel + kc] =
                                        FixedPoint(raw, cfg.n);
                                }
                        grid.bind(pe, a_vec, b_vec);
                    }
                    const std::vector<std::int64_t> sums =
                        grid.run_pass(result.output.scale_log2);
                    for (int pe = 0; pe < grid.size(); ++pe) {
                        const std::uint64_t pixel = t * grid.size() + pe;
                        if (pixel >= total_pixels) break;
                        result.output.at(m, static_cast<int>(pixel / layer.out_cols),
                                         static_cast<int>(pixel % layer.out_cols)) += sums[pe];
                    }
                }
            }
        }
    }
    return result;
}

NetworkSimResult simulate_network(std::span<const LayerShape> layers,
                                  const CipuConfig& cfg, const TileConfig& tile,
                                  SimMode mode, std::uint64_t budget,
                                  std::uint64_t seed) {
    if (layers.empty())
        throw std::invalid_argument("network needs at least one layer");
    PerfParams p{cfg.n, cfg.delta_mult, 400e6, tile};

    NetworkSimResult net;
    for (std::size_t li = 0; li < layers.size(); ++li) {
        const LayerShape& layer = layers[li];
        layer.validate();
        NetworkLayerResult lr;
        lr.name = layer.name;
        const std::uint64_t positions = static_cast<std::uint64_t>(layer.out_rows) *
                                        layer.out_cols * layer.in_channels *
                                        layer.out_channels;
        if (mode == SimMode::digit_level) {
            if (positions > budget)
                throw std::range_error(
                    "layer '" + layer.name + "' exceeds the digit-level budget (" +
                    std::to_string(positions) + " > " + std::to_string(budget) +
                    "); raise --budget or rerun with --mode analytic");
            const Tensor in = random_feature_map(layer, cfg.n, seed + 2 * li);
            const Tensor w = random_kernels(layer, cfg.n, seed + 2 * li + 1);
            const LayerSimResult sim = simulate_layer(layer, in, w, tile, cfg);
            lr.digit_level = true;
            lr.oracle_match = sim.output == reference_conv(layer, in, w);
            lr.cycles = sim.measured_cycles;
        } else {
            lr.digit_level = false;
            lr.oracle_match = false;
            lr.cycles = cycles_layer(layer, p);
        }
        net.total_cycles += lr.cycles;
        net.layers.push_back(std::move(lr));
    }
    return net;
}

Tensor random_feature_map(const LayerShape& layer, int width, std::uint64_t seed) {
    return random_tensor({layer.in_channels, layer.in_rows(), layer.in_cols()}, width, seed);
}

Tensor random_kernels(const LayerShape& layer, int width, std::uint64_t seed) {
    return random_tensor({layer.out_channels, layer.in_channels, layer.kernel, layer.kernel},
                         width, seed);
}

} // namespace cipusim
