#include "cipusim/perf_model.hpp"

#include <stdexcept>

namespace cipusim {

void PerfParams::validate() const {
    if (n < 1) throw std::invalid_argument("precision must be positive");
    if (delta_mult < 0) throw std::invalid_argument("delta_mult must be non-negative");
    if (freq_hz <= 0.0) throw std::invalid_argument("frequency must be positive");
    tile.validate();
}

std::uint64_t delta_ip(int n, int delta_mult) {
    if (n < 1 || delta_mult < 0)
        throw std::invalid_argument("invalid online-delay parameters");
    return static_cast<std::uint64_t>(n) * n + delta_mult;
}

std::uint64_t cycles_layer(const LayerShape& layer, const PerfParams& p) {
    p.validate();
    const LayerSchedule s = schedule_layer(layer, p.tile);
    const std::uint64_t kk = static_cast<std::uint64_t>(layer.kernel) * layer.kernel;
    return delta_ip(p.n, p.delta_mult) * (kk + s.in_channel_groups) * s.spatial_tiles *
           s.out_channel_groups;
}

std::uint64_t ops_layer(const LayerShape& layer) {
    layer.validate();
    return 2ULL * layer.kernel * layer.kernel * layer.in_channels * layer.out_channels *
           layer.out_rows * layer.out_cols;
}

double inference_time_s(std::uint64_t cycles, double freq_hz) {
    if (freq_hz <= 0.0) throw std::invalid_argument("frequency must be positive");
    return static_cast<double>(cycles) / freq_hz;
}

double throughput_gops(std::uint64_t ops, double seconds) {
    if (seconds <= 0.0) throw std::invalid_argument("throughput over a non-positive time");
    return static_cast<double>(ops) / seconds / 1e9;
}

std::uint64_t baseline_cycles_layer(const LayerShape& layer, const PerfParams& p,
                                    const BaselineParams& b) {
    p.validate();
    if (b.n_redc < 1 || b.overhead_factor < 0)
        throw std::invalid_argument("invalid baseline parameters");
    const LayerSchedule s = schedule_layer(layer, p.tile);
    const std::uint64_t kk = static_cast<std::uint64_t>(layer.kernel) * layer.kernel;
    const std::uint64_t group_cost =
        static_cast<std::uint64_t>(p.n) * p.n + static_cast<std::uint64_t>(b.overhead_factor) * p.n;
    return group_cost * (kk * b.n_redc + s.in_channel_groups) * s.spatial_tiles *
           s.out_channel_groups;
}

ComparisonReport build_report(std::span<const LayerShape> layers, const PerfParams& p,
                              const BaselineParams& b) {
    if (layers.empty())
        throw std::invalid_argument("report needs at least one layer");
    p.validate();

    ComparisonReport rep;
    rep.freq_hz = p.freq_hz;
    rep.precision_bits = p.n;
    for (const LayerShape& layer : layers) {
        LayerPerf lp;
        lp.name = layer.name;
        lp.cycles_l2r = cycles_layer(layer, p);
        lp.cycles_baseline = baseline_cycles_layer(layer, p, b);
        lp.ops = ops_layer(layer);
        lp.time_l2r_s = inference_time_s(lp.cycles_l2r, p.freq_hz);
        lp.time_baseline_s = inference_time_s(lp.cycles_baseline, p.freq_hz);
        lp.gops_l2r = throughput_gops(lp.ops, lp.time_l2r_s);
        lp.gops_baseline = throughput_gops(lp.ops, lp.time_baseline_s);
        rep.total_cycles_l2r += lp.cycles_l2r;
        rep.total_cycles_baseline += lp.cycles_baseline;
        rep.total_ops += lp.ops;
        rep.layers.push_back(std::move(lp));
    }
    rep.total_time_l2r_s = inference_time_s(rep.total_cycles_l2r, p.freq_hz);
    rep.total_time_baseline_s = inference_time_s(rep.total_cycles_baseline, p.freq_hz);
    rep.total_gops_l2r = throughput_gops(rep.total_ops, rep.total_time_l2r_s);
    rep.total_gops_baseline = throughput_gops(rep.total_ops, rep.total_time_baseline_s);
    rep.modeled_speedup = static_cast<double>(rep.total_cycles_baseline) /
                          static_cast<double>(rep.total_cycles_l2r);
    return rep;
}

} // namespace cipusim
