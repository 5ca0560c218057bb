#ifndef CIPUSIM_PERF_MODEL_HPP
#define CIPUSIM_PERF_MODEL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cipusim/layer.hpp"

namespace cipusim {

struct PerfParams {
    int n = 8;
    int delta_mult = 3;
    double freq_hz = 400e6;
    TileConfig tile;

    void validate() const;
};

// Bit-serial reference cost model: per-group cost n^2 + overhead_factor*n
// and a serialized reduction of n_redc passes per kernel position.
struct BaselineParams {
    int n_redc = 1;
    int overhead_factor = 2;
};

// Online delay of the composite inner product: n^2 + delta_mult.
std::uint64_t delta_ip(int n, int delta_mult);

// (n^2 + delta_mult) * (k^2 + ceil(N/T_n)) * ceil(R*C/(T_r*T_c)) * ceil(M/T_m)
std::uint64_t cycles_layer(const LayerShape& layer, const PerfParams& p);

// 2 operations per multiply-accumulate: 2 * k^2 * N * M * R * C.
std::uint64_t ops_layer(const LayerShape& layer);

double inference_time_s(std::uint64_t cycles, double freq_hz);

// ops / seconds / 1e9; zero or negative time is a contract violation.
double throughput_gops(std::uint64_t ops, double seconds);

std::uint64_t baseline_cycles_layer(const LayerShape& layer, const PerfParams& p,
                                    const BaselineParams& b = {});

// Published synthesis-derived figures for the modeled 45 nm design and its
// bit-serial baseline. Reference data only; this model does not reproduce
// them.
struct ReferenceConstants {
    int technology_nm = 45;
    int freq_mhz = 400;
    int precision_bits = 8;
    double l2r_peak_gops = 48.97;
    double l2r_inference_ms = 0.86;
    double l2r_power_mw = 40.67;
    double l2r_tops_per_w = 1.20;
    double l2r_tops_per_mm2 = 200.45;
    double baseline_peak_gops = 14.40;
    double baseline_inference_ms = 2.24;
    double baseline_power_mw = 55.61;
    double baseline_tops_per_w = 0.25;
    double baseline_tops_per_mm2 = 44.40;
    double reported_speedup = 3.40;
};

struct LayerPerf {
    std::string name;
    std::uint64_t cycles_l2r = 0;
    std::uint64_t cycles_baseline = 0;
    std::uint64_t ops = 0;
    double time_l2r_s = 0.0;
    double time_baseline_s = 0.0;
    double gops_l2r = 0.0;
    double gops_baseline = 0.0;
};

struct ComparisonReport {
    std::vector<LayerPerf> layers;
    std::uint64_t total_cycles_l2r = 0;
    std::uint64_t total_cycles_baseline = 0;
    std::uint64_t total_ops = 0;
    double total_time_l2r_s = 0.0;
    double total_time_baseline_s = 0.0;
    double total_gops_l2r = 0.0;
    double total_gops_baseline = 0.0;
    double modeled_speedup = 0.0; // baseline total cycles / l2r total cycles
    double freq_hz = 0.0;
    int precision_bits = 0;
    ReferenceConstants reference;
};

ComparisonReport build_report(std::span<const LayerShape> layers, const PerfParams& p,
                              const BaselineParams& b = {});

} // namespace cipusim

#endif
