"""Smoke tests for the python bindings."""

import pytest

cipusim = pytest.importorskip("cipusim")


def test_quantize_and_roundtrip():
    v = cipusim.quantize(0.5, 8)
    assert v.raw == 64
    digits = cipusim.to_digit_stream(v)
    assert digits == [1, 0, 0, 0, 0, 0, 0, 0]
    assert cipusim.reconstruct(digits) == cipusim.Dyadic(1, 1)
    assert cipusim.quantize(-0.3, 8).raw == -38


def test_online_multiply_exact():
    a = cipusim.quantize(-0.3, 8)
    b = cipusim.quantize(0.7, 8)
    res = cipusim.online_multiply(a, b)
    assert res.value() == cipusim.Dyadic(a.raw * b.raw, 14)
    assert res.first_digit_cycle == 67

    neg_one = cipusim.FixedPoint(-128, 8)
    assert cipusim.online_multiply(neg_one, neg_one).value() == cipusim.Dyadic(1, 0)


def test_composite_inner_product():
    cfg = cipusim.CipuConfig(n=8, k=3, delta_mult=3,
                             overflow=cipusim.OverflowPolicy.auto_scale)
    a = [cipusim.FixedPoint(r, 8) for r in (-128, 57, 111)]
    b = [cipusim.FixedPoint(r, 8) for r in (64, -90, 3)]
    res = cipusim.run_inner_product(a, b, cfg)
    dot = sum(x.raw * y.raw for x, y in zip(a, b))
    assert res.value() == cipusim.Dyadic(dot, 14)


def test_cycle_formulas():
    assert cipusim.delta_ip(8, 3) == 67
    layers = cipusim.vgg16_conv_layers()
    p = cipusim.PerfParams()
    assert cipusim.cycles_layer(layers[0], p) == 33_617_920
    assert cipusim.ops_layer(layers[0]) == 173_408_256
    assert cipusim.baseline_cycles_layer(layers[0], p) == 40_140_800


def test_report_consistency():
    layers = cipusim.vgg16_conv_layers()
    rep = cipusim.build_report(layers, cipusim.PerfParams())
    assert rep.total_cycles_l2r == sum(l.cycles_l2r for l in rep.layers)
    assert rep.modeled_speedup == rep.total_cycles_baseline / rep.total_cycles_l2r
    text = cipusim.render_perf_report(layers)
    assert "48.97" in text and "3.40" in text and "synthesis-derived" in text


def test_simulated_layer_matches_reference():
    layer = cipusim.LayerShape("tiny", 6, 6, 4, 2, 3, 1, 1)
    inp = cipusim.random_feature_map(layer, 8, 11)
    w = cipusim.random_kernels(layer, 8, 12)
    cfg = cipusim.CipuConfig(n=8, k=1, delta_mult=3,
                             overflow=cipusim.OverflowPolicy.auto_scale)
    out, cycles = cipusim.simulate_layer(layer, inp, w, cipusim.TileConfig(), cfg)
    ref = cipusim.reference_conv(layer, inp, w)
    assert out == ref
    assert cycles == cipusim.cycles_layer(layer, cipusim.PerfParams())


def test_parse_layer_table_errors():
    with pytest.raises(RuntimeError):
        cipusim.parse_layer_table("x,224,-1,3,64,3,1,1\n")
