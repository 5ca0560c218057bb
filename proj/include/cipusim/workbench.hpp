#ifndef CIPUSIM_WORKBENCH_HPP
#define CIPUSIM_WORKBENCH_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include "cipusim/layer.hpp"
#include "cipusim/simulator.hpp"

namespace cipusim {

enum class OutputFormat { text, csv };

struct RunConfig {
    int n = 8;
    int delta_mult = 3;
    double freq_mhz = 400.0;
    TileConfig tile{8, 8, 8, 1};
    std::uint64_t seed = 1;
    SimMode mode = SimMode::digit_level;
    OutputFormat format = OutputFormat::text;
    std::uint64_t budget = std::uint64_t{1} << 22;

    double freq_hz() const { return freq_mhz * 1e6; }
};

// Runs the built-in verification suites (multiplier oracle, composite
// inner-product oracle, online-delay checks, register-schedule fuzz,
// simulator-vs-formula grid, convolution oracle). One line per suite;
// returns 0 only if every suite passes. Deterministic for a fixed seed.
int cmd_verify(const RunConfig& cfg, std::ostream& out);

// Renders the layer/total comparison report with the published reference
// block appended.
int cmd_perf(const std::vector<LayerShape>& layers, const RunConfig& cfg,
             std::ostream& out);

// Digit-level (or analytic) per-layer simulation over seeded tensors with
// oracle verdicts and cycle counts.
int cmd_simulate(const std::vector<LayerShape>& layers, const RunConfig& cfg,
                 std::ostream& out);

} // namespace cipusim

#endif
