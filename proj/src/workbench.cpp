#include "cipusim/workbench.hpp"

#include <cinttypes>
#include <cstdio>
#include <random>
#include <string>

#include "cipusim/perf_model.hpp"

namespace cipusim {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fmt(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%" PRIu64, v);
    return buf;
}

std::int32_t random_raw(std::mt19937_64& eng, int width) {
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    return static_cast<std::int32_t>(eng() & mask) - (std::int32_t{1} << (width - 1));
}

std::vector<FixedPoint> random_operands(std::mt19937_64& eng, int width, int count) {
    std::vector<FixedPoint> v;
    v.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t)
        v.emplace_back(random_raw(eng, width), width);
    return v;
}

bool suite_multiplier_exhaustive(std::string& detail) {
    for (int n = 2; n <= 4; ++n) {
        const int half = 1 << (n - 1);
        for (int ra = -half; ra < half; ++ra)
            for (int rb = -half; rb < half; ++rb) {
                const auto res = online_multiply(FixedPoint(ra, n), FixedPoint(rb, n));
                const Dyadic want(static_cast<std::int64_t>(ra) * rb, 2 * n - 2);
                if (res.value() != want) {
                    detail = "n=" + std::to_string(n) + " raw " + std::to_string(ra) +
                             "*" + std::to_string(rb);
                    return false;
                }
            }
    }
    detail = "all signed pairs, n=2..4";
    return true;
}

bool suite_composite_random(std::uint64_t seed, std::string& detail) {
    std::mt19937_64 eng(seed);
    const int n = 8;
    int checked = 0;
    for (int k : {1, 9, 72}) {
        CipuConfig cfg{n, k, 3, OverflowPolicy::auto_scale};
        for (int run = 0; run < 200; ++run) {
            const auto a = random_operands(eng, n, k);
            const auto b = random_operands(eng, n, k);
            std::int64_t dot = 0;
            for (int t = 0; t < k; ++t)
                dot += static_cast<std::int64_t>(a[t].raw) * b[t].raw;
            const auto res = run_inner_product(a, b, cfg);
            if (res.value() != Dyadic(dot, 2 * n - 2)) {
                detail = "k=" + std::to_string(k) + " run " + std::to_string(run);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " random vectors, k in {1,9,72}";
    return true;
}

bool suite_online_delay(std::uint64_t seed, std::string& detail) {
    std::mt19937_64 eng(seed);
    for (int n : {2, 4, 8})
        for (int dm : {0, 3}) {
            CipuConfig cfg{n, 9, dm, OverflowPolicy::auto_scale};
            const auto a = random_operands(eng, n, cfg.k);
            const auto b = random_operands(eng, n, cfg.k);
            const auto res = run_inner_product(a, b, cfg);
            const std::uint64_t want = delta_ip(n, dm);
            if (res.first_digit_cycle != want) {
                detail = "n=" + std::to_string(n) + " delta=" + std::to_string(dm) +
                         ": first digit at " + std::to_string(res.first_digit_cycle) +
                         ", expected " + std::to_string(want);
                return false;
            }
        }
    detail = "first digit at n^2+delta for n in {2,4,8}, delta in {0,3}";
    return true;
}

bool suite_register_schedule(std::uint64_t seed, std::string& detail) {
    std::mt19937_64 eng(seed);
    std::uint64_t cycles_checked = 0;
    for (int run = 0; run < 40; ++run) {
        const int n = (run % 3 == 0) ? 2 : (run % 3 == 1 ? 4 : 8);
        const int k = (run % 2 == 0) ? 3 : 9;
        CipuConfig cfg{n, k, 3, OverflowPolicy::auto_scale};
        const auto a = random_operands(eng, n, k);
        const auto b = random_operands(eng, n, k);
        std::vector<BitColumn> ac, bc;
        for (int pos = 1; pos <= n; ++pos) {
            ac.push_back(BitColumn::slice(a, pos));
            bc.push_back(BitColumn::slice(b, pos));
        }
        InnerProductUnit unit(cfg);
        std::int64_t prev_residual = 0;
        for (std::uint64_t c = 0; c < unit.input_cycles(); ++c) {
            unit.step_input(ac[c % n], bc[c / n]);
            const bool boundary = c % n == 0;
            if (boundary && unit.ppr().value() != 0) {
                detail = "ppr not reset after boundary cycle " + std::to_string(c);
                return false;
            }
            if (!boundary && unit.residual().value() != prev_residual) {
                detail = "residual changed off-boundary at cycle " + std::to_string(c);
                return false;
            }
            prev_residual = unit.residual().value();
            ++cycles_checked;
        }
        while (!unit.finished()) {
            unit.step_drain();
            if (unit.ppr().value() != 0) {
                detail = "ppr nonzero while draining";
                return false;
            }
            ++cycles_checked;
        }
    }
    detail = std::to_string(cycles_checked) + " cycles fuzzed";
    return true;
}

bool suite_sim_vs_formula(std::uint64_t seed, std::string& detail) {
    std::mt19937_64 eng(seed);
    int idx = 0;
    for (int n : {2, 4, 8})
        for (int kernel : {1, 3})
            for (auto [r, c, in_ch, out_ch] :
                 {std::array<int, 4>{1, 1, 8, 1}, std::array<int, 4>{5, 7, 3, 2},
                  std::array<int, 4>{8, 8, 9, 4}, std::array<int, 4>{10, 10, 16, 3}}) {
                LayerShape layer{"grid" + std::to_string(idx++), r, c, in_ch, out_ch,
                                 kernel, 1, kernel / 2};
                CipuConfig cfg{n, 1, 3, OverflowPolicy::auto_scale};
                const Tensor in = random_feature_map(layer, n, eng());
                const Tensor w = random_kernels(layer, n, eng());
                const auto sim = simulate_layer(layer, in, w, TileConfig{}, cfg);
                const PerfParams p{n, 3, 400e6, TileConfig{}};
                if (sim.measured_cycles != cycles_layer(layer, p)) {
                    detail = layer.name + " n=" + std::to_string(n) + ": measured " +
                             std::to_string(sim.measured_cycles) + " != formula " +
                             std::to_string(cycles_layer(layer, p));
                    return false;
                }
            }
    detail = "measured cycles equal the closed form over the grid";
    return true;
}

bool suite_conv_oracle(std::uint64_t seed, std::string& detail) {
    std::mt19937_64 eng(seed);
    for (int run = 0; run < 6; ++run) {
        const int kernel = (run % 2 == 0) ? 3 : 1;
        LayerShape layer{"conv" + std::to_string(run),
                         2 + static_cast<int>(eng() % 10),
                         2 + static_cast<int>(eng() % 10),
                         1 + static_cast<int>(eng() % 12),
                         1 + static_cast<int>(eng() % 6),
                         kernel, 1, kernel / 2};
        CipuConfig cfg{8, 1, 3, OverflowPolicy::auto_scale};
        const Tensor in = random_feature_map(layer, 8, eng());
        const Tensor w = random_kernels(layer, 8, eng());
        const auto sim = simulate_layer(layer, in, w, TileConfig{}, cfg);
        if (!(sim.output == reference_conv(layer, in, w))) {
            detail = layer.name + ": simulated output differs from the reference";
            return false;
        }
    }
    detail = "simulated outputs bit-exact against the reference convolution";
    return true;
}

void report_text(const ComparisonReport& rep, std::ostream& out) {
    out << "layer,cycles_l2r,cycles_baseline,time_l2r_ms,time_baseline_ms,"
           "gops_l2r,gops_baseline,ops\n";
    auto row = [&](const std::string& name, std::uint64_t cl, std::uint64_t cb,
                   double tl, double tb, double gl, double gb, std::uint64_t ops) {
        out << name << "," << fmt(cl) << "," << fmt(cb) << "," << fmt(tl * 1e3) << ","
            << fmt(tb * 1e3) << "," << fmt(gl) << "," << fmt(gb) << "," << fmt(ops)
            << "\n";
    };
    for (const LayerPerf& lp : rep.layers)
        row(lp.name, lp.cycles_l2r, lp.cycles_baseline, lp.time_l2r_s, lp.time_baseline_s,
            lp.gops_l2r, lp.gops_baseline, lp.ops);
    row("total", rep.total_cycles_l2r, rep.total_cycles_baseline, rep.total_time_l2r_s,
        rep.total_time_baseline_s, rep.total_gops_l2r, rep.total_gops_baseline,
        rep.total_ops);
}

void report_reference_block(const ComparisonReport& rep, std::ostream& out,
                            const char* prefix) {
    const ReferenceConstants& rc = rep.reference;
    out << prefix << "modeled speedup (baseline cycles / l2r cycles): "
        << fmt(rep.modeled_speedup) << "\n";
    out << prefix << "reference values below are published synthesis-derived figures "
                     "for the modeled design; this simulator does not reproduce them\n";
    out << prefix << "reference technology: " << rc.technology_nm
        << " nm, frequency: " << rc.freq_mhz << " MHz, precision: " << rc.precision_bits
        << " bits\n";
    out << prefix << "reference l2r-cipu: peak " << fmt(rc.l2r_peak_gops)
        << " GOPS, inference " << fmt(rc.l2r_inference_ms) << " ms, power "
        << fmt(rc.l2r_power_mw) << " mW, " << fmt(rc.l2r_tops_per_w) << " TOPS/W, "
        << fmt(rc.l2r_tops_per_mm2) << " TOPS/mm2\n";
    out << prefix << "reference baseline: peak " << fmt(rc.baseline_peak_gops)
        << " GOPS, inference " << fmt(rc.baseline_inference_ms) << " ms, power "
        << fmt(rc.baseline_power_mw) << " mW, " << fmt(rc.baseline_tops_per_w)
        << " TOPS/W, " << fmt(rc.baseline_tops_per_mm2) << " TOPS/mm2\n";
    out << prefix << "reference reported speedup: " << fmt(rc.reported_speedup)
        << "x (synthesis-derived, not reproduced)\n";
}

} // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    struct Suite {
        const char* name;
        bool ok;
        std::string detail;
    };
    std::vector<Suite> suites;
    auto run = [&](const char* name, auto&& fn) {
        std::string detail;
        const bool ok = fn(detail);
        suites.push_back({name, ok, detail});
    };
    run("multiplier-exhaustive", [&](std::string& d) { return suite_multiplier_exhaustive(d); });
    run("composite-random", [&](std::string& d) { return suite_composite_random(cfg.seed, d); });
    run("online-delay", [&](std::string& d) { return suite_online_delay(cfg.seed + 1, d); });
    run("register-schedule", [&](std::string& d) { return suite_register_schedule(cfg.seed + 2, d); });
    run("sim-vs-formula", [&](std::string& d) { return suite_sim_vs_formula(cfg.seed + 3, d); });
    run("conv-oracle", [&](std::string& d) { return suite_conv_oracle(cfg.seed + 4, d); });

    int failures = 0;
    for (const Suite& s : suites) {
        out << (s.ok ? "pass" : "FAIL") << "  " << s.name << ": " << s.detail << "\n";
        if (!s.ok) ++failures;
    }
    out << (failures == 0 ? "verify: all suites passed\n"
                          : "verify: " + std::to_string(failures) + " suite(s) failed\n");
    return failures == 0 ? 0 : 1;
}

int cmd_perf(const std::vector<LayerShape>& layers, const RunConfig& cfg,
             std::ostream& out) {
    const PerfParams p{cfg.n, cfg.delta_mult, cfg.freq_hz(), cfg.tile};
    const ComparisonReport rep = build_report(layers, p);
    if (cfg.format == OutputFormat::text) {
        out << "performance report: n=" << cfg.n << ", delta_mult=" << cfg.delta_mult
            << ", freq_mhz=" << fmt(cfg.freq_mhz) << "\n";
        report_text(rep, out);
        report_reference_block(rep, out, "");
    } else {
        report_text(rep, out);
        report_reference_block(rep, out, "# ");
    }
    return 0;
}

int cmd_simulate(const std::vector<LayerShape>& layers, const RunConfig& cfg,
                 std::ostream& out) {
    CipuConfig unit{cfg.n, 1, cfg.delta_mult, OverflowPolicy::auto_scale};
    const NetworkSimResult net =
        simulate_network(layers, unit, cfg.tile, cfg.mode, cfg.budget, cfg.seed);
    const PerfParams p{cfg.n, cfg.delta_mult, cfg.freq_hz(), cfg.tile};

    bool all_ok = true;
    out << "layer,mode,oracle_match,cycles,formula_cycles\n";
    for (std::size_t i = 0; i < net.layers.size(); ++i) {
        const NetworkLayerResult& lr = net.layers[i];
        const std::uint64_t formula = cycles_layer(layers[i], p);
        const char* verdict = lr.digit_level ? (lr.oracle_match ? "yes" : "NO") : "analytic";
        out << lr.name << "," << (lr.digit_level ? "digit-level" : "analytic") << ","
            << verdict << "," << fmt(lr.cycles) << "," << fmt(formula) << "\n";
        if (lr.digit_level && !lr.oracle_match) all_ok = false;
        if (lr.cycles != formula) all_ok = false;
    }
    out << "total," << (cfg.mode == SimMode::digit_level ? "digit-level" : "analytic")
        << ",," << fmt(net.total_cycles) << ",\n";
    return all_ok ? 0 : 1;
}

} // namespace cipusim
