#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cipusim/layer_table.hpp"
#include "cipusim/workbench.hpp"

namespace {

std::vector<cipusim::LayerShape> load_layers(const std::string& path) {
    if (path.empty())
        return cipusim::vgg16_conv_layers();
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open layer table '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return cipusim::parse_layer_table(ss.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bit-exact model of a left-to-right composite inner-product "
                 "CNN accelerator with an analytic performance model"};
    app.require_subcommand(1);

    cipusim::RunConfig cfg;
    std::string layers_path;
    std::string mode = "digit";
    std::string format = "text";
    std::vector<int> tile_fields;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--layers", layers_path,
                        "layer table file (default: built-in VGG-16 conv layers)");
        cmd->add_option("--precision", cfg.n, "operand precision in bits")
            ->check(CLI::Range(2, 24));
        cmd->add_option("--delta-mult", cfg.delta_mult, "multiplier online delay in cycles")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--freq-mhz", cfg.freq_mhz, "clock frequency in MHz")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tile", tile_fields, "tile sizes Tn,Tr,Tc,Tm")
            ->delimiter(',')->expected(4);
        cmd->add_option("--seed", cfg.seed, "seed for the deterministic generators");
        cmd->add_option("--mode", mode, "digit | analytic")
            ->check(CLI::IsMember({"digit", "analytic"}));
        cmd->add_option("--format", format, "text | csv")
            ->check(CLI::IsMember({"text", "csv"}));
        cmd->add_option("--budget", cfg.budget,
                        "R*C*N*M limit for digit-level simulation");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suites");
    CLI::App* simulate = app.add_subcommand("simulate", "digit-level layer simulation "
                                                        "with oracle checks");
    CLI::App* perf = app.add_subcommand("perf", "analytic performance comparison report");
    add_common(verify);
    add_common(simulate);
    add_common(perf);

    CLI11_PARSE(app, argc, argv);

    if (!tile_fields.empty())
        cfg.tile = cipusim::TileConfig{tile_fields[0], tile_fields[1], tile_fields[2],
                                       tile_fields[3]};
    cfg.mode = mode == "digit" ? cipusim::SimMode::digit_level : cipusim::SimMode::analytic;
    cfg.format = format == "text" ? cipusim::OutputFormat::text : cipusim::OutputFormat::csv;

    try {
        if (verify->parsed())
            return cipusim::cmd_verify(cfg, std::cout);
        const auto layers = load_layers(layers_path);
        if (perf->parsed())
            return cipusim::cmd_perf(layers, cfg, std::cout);
        return cipusim::cmd_simulate(layers, cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
