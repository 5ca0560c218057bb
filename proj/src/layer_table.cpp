#include "cipusim/layer_table.hpp"

#include <charconv>
#include <unordered_set>

namespace cipusim {

namespace {

const char* kFieldNames[8] = {"name", "R", "C", "N", "M", "k", "stride", "pad"};

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int_field(std::string_view token, int line, int field_idx, int min_value) {
    token = strip(token);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw LayerTableError(line, kFieldNames[field_idx],
                              "expected an integer, got '" + std::string(token) + "'");
    if (value < min_value)
        throw LayerTableError(line, kFieldNames[field_idx],
                              "value " + std::to_string(value) + " below minimum " +
                                  std::to_string(min_value));
    return value;
}

} // namespace

std::vector<LayerShape> parse_layer_table(std::string_view text) {
    std::vector<LayerShape> layers;
    std::unordered_set<std::string> names;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        std::vector<std::string_view> tokens;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            tokens.push_back(line.substr(start, comma == std::string_view::npos
                                                    ? comma : comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (tokens.size() != 8)
            throw LayerTableError(line_no, "line",
                                  "expected 8 comma-separated fields, got " +
                                      std::to_string(tokens.size()));

        LayerShape layer;
        layer.name = std::string(strip(tokens[0]));
        if (layer.name.empty())
            throw LayerTableError(line_no, "name", "empty layer name");
        if (!names.insert(layer.name).second)
            throw LayerTableError(line_no, "name", "duplicate layer name '" + layer.name + "'");
        layer.out_rows = parse_int_field(tokens[1], line_no, 1, 1);
        layer.out_cols = parse_int_field(tokens[2], line_no, 2, 1);
        layer.in_channels = parse_int_field(tokens[3], line_no, 3, 1);
        layer.out_channels = parse_int_field(tokens[4], line_no, 4, 1);
        layer.kernel = parse_int_field(tokens[5], line_no, 5, 1);
        layer.stride = parse_int_field(tokens[6], line_no, 6, 1);
        layer.padding = parse_int_field(tokens[7], line_no, 7, 0);
        layer.validate();
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::vector<LayerShape> vgg16_conv_layers() {
    auto conv = [](const char* name, int rc, int n, int m) {
        return LayerShape{name, rc, rc, n, m, 3, 1, 1};
    };
    return {
        conv("conv1_1", 224, 3, 64),    conv("conv1_2", 224, 64, 64),
        conv("conv2_1", 112, 64, 128),  conv("conv2_2", 112, 128, 128),
        conv("conv3_1", 56, 128, 256),  conv("conv3_2", 56, 256, 256),
        conv("conv3_3", 56, 256, 256),  conv("conv4_1", 28, 256, 512),
        conv("conv4_2", 28, 512, 512),  conv("conv4_3", 28, 512, 512),
        conv("conv5_1", 14, 512, 512),  conv("conv5_2", 14, 512, 512),
        conv("conv5_3", 14, 512, 512),
    };
}

} // namespace cipusim
