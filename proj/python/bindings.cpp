#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "cipusim/cipu.hpp"
#include "cipusim/layer_table.hpp"
#include "cipusim/perf_model.hpp"
#include "cipusim/simulator.hpp"
#include "cipusim/workbench.hpp"

#include <sstream>

namespace py = pybind11;
using namespace cipusim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bit-exact left-to-right composite inner-product unit and "
              "CNN accelerator tile model";

    py::class_<FixedPoint>(m, "FixedPoint")
        .def(py::init<std::int32_t, int>(), py::arg("raw"), py::arg("width"))
        .def_readonly("raw", &FixedPoint::raw)
        .def_readonly("width", &FixedPoint::width)
        .def("value", &FixedPoint::value)
        .def("__repr__", [](const FixedPoint& v) {
            return "FixedPoint(raw=" + std::to_string(v.raw) +
                   ", width=" + std::to_string(v.width) + ")";
        });

    py::class_<Dyadic>(m, "Dyadic")
        .def(py::init<std::int64_t, int>(), py::arg("num"), py::arg("log2_den"))
        .def_readonly("num", &Dyadic::num)
        .def_readonly("log2_den", &Dyadic::log2_den)
        .def("to_double", &Dyadic::to_double)
        .def(py::self == py::self)
        .def("__repr__", [](const Dyadic& d) {
            return "Dyadic(" + std::to_string(d.num) + ", 2^-" +
                   std::to_string(d.log2_den) + ")";
        });

    m.def("quantize", &quantize, py::arg("x"), py::arg("width"));
    m.def("to_digit_stream", &to_digit_stream);
    m.def("reconstruct", &reconstruct);
    m.def("on_the_fly_convert", &on_the_fly_convert, py::arg("digits"), py::arg("width"));

    py::enum_<OverflowPolicy>(m, "OverflowPolicy")
        .value("strict", OverflowPolicy::strict)
        .value("auto_scale", OverflowPolicy::auto_scale);

    py::class_<CipuConfig>(m, "CipuConfig")
        .def(py::init([](int n, int k, int delta_mult, OverflowPolicy overflow) {
                 return CipuConfig{n, k, delta_mult, overflow};
             }),
             py::arg("n") = 8, py::arg("k") = 1, py::arg("delta_mult") = 3,
             py::arg("overflow") = OverflowPolicy::strict)
        .def_readwrite("n", &CipuConfig::n)
        .def_readwrite("k", &CipuConfig::k)
        .def_readwrite("delta_mult", &CipuConfig::delta_mult)
        .def_readwrite("overflow", &CipuConfig::overflow)
        .def("delta_ip", &CipuConfig::delta_ip)
        .def("scale_exponent", &CipuConfig::scale_exponent);

    py::class_<InnerProductResult>(m, "InnerProductResult")
        .def_readonly("digits", &InnerProductResult::digits)
        .def_readonly("scale_exponent", &InnerProductResult::scale_exponent)
        .def_readonly("first_digit_cycle", &InnerProductResult::first_digit_cycle)
        .def_readonly("total_cycles", &InnerProductResult::total_cycles)
        .def("value", &InnerProductResult::value);

    m.def("online_multiply", &online_multiply, py::arg("a"), py::arg("b"),
          py::arg("delta_mult") = 3);
    m.def("run_inner_product",
          [](const std::vector<FixedPoint>& a, const std::vector<FixedPoint>& b,
             const CipuConfig& cfg) { return run_inner_product(a, b, cfg); });

    py::class_<LayerShape>(m, "LayerShape")
        .def(py::init([](std::string name, int r, int c, int n, int mm, int k,
                         int stride, int padding) {
                 return LayerShape{std::move(name), r, c, n, mm, k, stride, padding};
             }),
             py::arg("name"), py::arg("r"), py::arg("c"), py::arg("n"), py::arg("m"),
             py::arg("k"), py::arg("stride") = 1, py::arg("padding") = 0)
        .def_readwrite("name", &LayerShape::name)
        .def_readonly("out_rows", &LayerShape::out_rows)
        .def_readonly("out_cols", &LayerShape::out_cols)
        .def_readonly("in_channels", &LayerShape::in_channels)
        .def_readonly("out_channels", &LayerShape::out_channels)
        .def_readonly("kernel", &LayerShape::kernel)
        .def_readonly("stride", &LayerShape::stride)
        .def_readonly("padding", &LayerShape::padding);

    py::class_<TileConfig>(m, "TileConfig")
        .def(py::init([](int t_n, int t_r, int t_c, int t_m) {
                 return TileConfig{t_n, t_r, t_c, t_m};
             }),
             py::arg("t_n") = 8, py::arg("t_r") = 8, py::arg("t_c") = 8,
             py::arg("t_m") = 1)
        .def_readwrite("t_n", &TileConfig::t_n)
        .def_readwrite("t_r", &TileConfig::t_r)
        .def_readwrite("t_c", &TileConfig::t_c)
        .def_readwrite("t_m", &TileConfig::t_m);

    py::class_<PerfParams>(m, "PerfParams")
        .def(py::init([](int n, int delta_mult, double freq_hz, TileConfig tile) {
                 return PerfParams{n, delta_mult, freq_hz, tile};
             }),
             py::arg("n") = 8, py::arg("delta_mult") = 3, py::arg("freq_hz") = 400e6,
             py::arg("tile") = TileConfig{});

    m.def("delta_ip", &delta_ip, py::arg("n"), py::arg("delta_mult"));
    m.def("cycles_layer", &cycles_layer);
    m.def("ops_layer", &ops_layer);
    m.def("inference_time_s", &inference_time_s);
    m.def("throughput_gops", &throughput_gops);
    m.def("baseline_cycles_layer",
          [](const LayerShape& l, const PerfParams& p) { return baseline_cycles_layer(l, p); });

    py::class_<LayerPerf>(m, "LayerPerf")
        .def_readonly("name", &LayerPerf::name)
        .def_readonly("cycles_l2r", &LayerPerf::cycles_l2r)
        .def_readonly("cycles_baseline", &LayerPerf::cycles_baseline)
        .def_readonly("ops", &LayerPerf::ops)
        .def_readonly("gops_l2r", &LayerPerf::gops_l2r)
        .def_readonly("gops_baseline", &LayerPerf::gops_baseline);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("layers", &ComparisonReport::layers)
        .def_readonly("total_cycles_l2r", &ComparisonReport::total_cycles_l2r)
        .def_readonly("total_cycles_baseline", &ComparisonReport::total_cycles_baseline)
        .def_readonly("total_ops", &ComparisonReport::total_ops)
        .def_readonly("modeled_speedup", &ComparisonReport::modeled_speedup);

    m.def("build_report",
          [](const std::vector<LayerShape>& layers, const PerfParams& p) {
              return build_report(layers, p);
          });

    m.def("parse_layer_table",
          [](const std::string& text) { return parse_layer_table(text); });
    m.def("vgg16_conv_layers", &vgg16_conv_layers);

    py::class_<Tensor>(m, "Tensor")
        .def_property_readonly("dims", &Tensor::dims)
        .def_property_readonly("width", &Tensor::width)
        .def_property_readonly("data", [](const Tensor& t) { return t.raw(); });

    py::class_<AccumTensor>(m, "AccumTensor")
        .def_readonly("channels", &AccumTensor::channels)
        .def_readonly("rows", &AccumTensor::rows)
        .def_readonly("cols", &AccumTensor::cols)
        .def_readonly("scale_log2", &AccumTensor::scale_log2)
        .def_readonly("data", &AccumTensor::data)
        .def(py::self == py::self);

    m.def("random_feature_map", &random_feature_map);
    m.def("random_kernels", &random_kernels);
    m.def("reference_conv", &reference_conv);
    m.def("simulate_layer", [](const LayerShape& layer, const Tensor& input,
                               const Tensor& weights, const TileConfig& tile,
                               const CipuConfig& cfg) {
        const auto r = simulate_layer(layer, input, weights, tile, cfg);
        return py::make_tuple(r.output, r.measured_cycles);
    });

    m.def("render_perf_report", [](const std::vector<LayerShape>& layers, int n,
                                   int delta_mult, double freq_mhz, bool csv) {
        RunConfig cfg;
        cfg.n = n;
        cfg.delta_mult = delta_mult;
        cfg.freq_mhz = freq_mhz;
        cfg.format = csv ? OutputFormat::csv : OutputFormat::text;
        std::ostringstream out;
        cmd_perf(layers, cfg, out);
        return out.str();
    }, py::arg("layers"), py::arg("n") = 8, py::arg("delta_mult") = 3,
       py::arg("freq_mhz") = 400.0, py::arg("csv") = false);
}
