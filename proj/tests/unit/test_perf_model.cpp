#include <doctest.h>

#include "cipusim/layer_table.hpp"
#include "cipusim/perf_model.hpp"

using namespace cipusim;

TEST_CASE("delta_ip formula") {
    CHECK(delta_ip(8, 3) == 67);
    CHECK(delta_ip(1, 0) == 1);
    CHECK(delta_ip(4, 3) == 19);
}

TEST_CASE("cycles_layer on the vgg shapes") {
    const PerfParams p; // n=8, delta=3, defaults
    const LayerShape conv1_1{"conv1_1", 224, 224, 3, 64, 3, 1, 1};
    CHECK(cycles_layer(conv1_1, p) == 33'617'920);
    const LayerShape conv3_1{"conv3_1", 56, 56, 128, 256, 3, 1, 1};
    CHECK(cycles_layer(conv3_1, p) == 21'011'200);
}

TEST_CASE("cycles_layer trivial corner") {
    PerfParams p;
    p.n = 1;
    p.delta_mult = 0;
    p.tile = TileConfig{8, 4, 4, 1};
    const LayerShape layer{"t", 4, 4, 8, 1, 1, 1, 0};
    CHECK(cycles_layer(layer, p) == 2);
}

TEST_CASE("ops_layer counts two ops per mac") {
    const LayerShape conv1_1{"conv1_1", 224, 224, 3, 64, 3, 1, 1};
    CHECK(ops_layer(conv1_1) == 173'408'256);
    const LayerShape one{"one", 1, 1, 1, 1, 1, 1, 0};
    CHECK(ops_layer(one) == 2);
}

TEST_CASE("vgg conv ops total is about 3.07e10") {
    std::uint64_t total = 0;
    for (const LayerShape& l : vgg16_conv_layers()) total += ops_layer(l);
    CHECK(total > 30'000'000'000ULL);
    CHECK(total < 31'000'000'000ULL);
}

TEST_CASE("inference_time and throughput") {
    CHECK(inference_time_s(400'000, 400e6) == doctest::Approx(1e-3));
    CHECK(inference_time_s(33'617'920, 400e6) == doctest::Approx(84.0448e-3));
    CHECK(inference_time_s(0, 400e6) == 0.0);
    CHECK(throughput_gops(1'000'000'000, 1.0) == doctest::Approx(1.0));
    CHECK(throughput_gops(173'408'256, 84.0448e-3) == doctest::Approx(2.0633).epsilon(1e-3));
    CHECK(throughput_gops(0, 1.0) == 0.0);
    CHECK_THROWS_AS(throughput_gops(1, 0.0), std::invalid_argument);
}

TEST_CASE("baseline cycle model") {
    SUBCASE("trivial layer at n=1") {
        PerfParams p;
        p.n = 1;
        p.tile = TileConfig{8, 4, 4, 1};
        const LayerShape layer{"t", 4, 4, 8, 1, 1, 1, 0};
        CHECK(baseline_cycles_layer(layer, p) == 6); // 3 * 2
    }
    SUBCASE("conv1_1 at n=8") {
        const PerfParams p;
        const LayerShape conv1_1{"conv1_1", 224, 224, 3, 64, 3, 1, 1};
        CHECK(baseline_cycles_layer(conv1_1, p) == 40'140'800);
    }
    SUBCASE("baseline dominates whenever 2n >= delta_mult") {
        const PerfParams p; // 2n = 16 >= 3
        for (const LayerShape& l : vgg16_conv_layers())
            CHECK(baseline_cycles_layer(l, p) >= cycles_layer(l, p));
    }
}

TEST_CASE("cycles_layer is monotone in every dimension") {
    const PerfParams p;
    const LayerShape base{"b", 14, 15, 20, 21, 3, 1, 1};
    const std::uint64_t c0 = cycles_layer(base, p);
    auto bump = [&](auto set) {
        LayerShape l = base;
        set(l);
        return cycles_layer(l, p);
    };
    CHECK(bump([](LayerShape& l) { l.out_rows += 3; }) >= c0);
    CHECK(bump([](LayerShape& l) { l.out_cols += 3; }) >= c0);
    CHECK(bump([](LayerShape& l) { l.in_channels += 3; }) >= c0);
    CHECK(bump([](LayerShape& l) { l.out_channels += 3; }) >= c0);
    CHECK(bump([](LayerShape& l) { l.kernel += 2; }) >= c0);
    PerfParams p2 = p;
    p2.n += 2;
    CHECK(cycles_layer(base, p2) >= c0);
}

TEST_CASE("build_report internal consistency") {
    const PerfParams p;
    SUBCASE("single layer totals equal the row") {
        const LayerShape layer{"one", 8, 8, 8, 4, 3, 1, 1};
        const std::vector<LayerShape> layers{layer};
        const ComparisonReport rep = build_report(layers, p);
        REQUIRE(rep.layers.size() == 1);
        CHECK(rep.total_cycles_l2r == rep.layers[0].cycles_l2r);
        CHECK(rep.total_cycles_baseline == rep.layers[0].cycles_baseline);
        CHECK(rep.total_ops == rep.layers[0].ops);
    }
    SUBCASE("doubling M doubles cycles but not the speedup") {
        const LayerShape layer{"one", 8, 8, 8, 4, 3, 1, 1};
        LayerShape doubled = layer;
        doubled.out_channels *= 2;
        const std::vector<LayerShape> a{layer}, b{doubled};
        const ComparisonReport ra = build_report(a, p), rb = build_report(b, p);
        CHECK(rb.total_cycles_l2r == 2 * ra.total_cycles_l2r);
        CHECK(rb.total_cycles_baseline == 2 * ra.total_cycles_baseline);
        CHECK(rb.modeled_speedup == doctest::Approx(ra.modeled_speedup));
    }
    SUBCASE("speedup equals the cycle ratio exactly") {
        const auto layers = vgg16_conv_layers();
        const ComparisonReport rep = build_report(layers, p);
        CHECK(rep.modeled_speedup ==
              static_cast<double>(rep.total_cycles_baseline) /
                  static_cast<double>(rep.total_cycles_l2r));
        CHECK(rep.reference.reported_speedup == doctest::Approx(3.40));
        CHECK(rep.reference.l2r_peak_gops == doctest::Approx(48.97));
        CHECK(rep.reference.baseline_peak_gops == doctest::Approx(14.40));
    }
}
