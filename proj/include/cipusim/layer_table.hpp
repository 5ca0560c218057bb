#ifndef CIPUSIM_LAYER_TABLE_HPP
#define CIPUSIM_LAYER_TABLE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cipusim/layer.hpp"

namespace cipusim {

class LayerTableError : public std::runtime_error {
public:
    LayerTableError(int line, const std::string& field, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line) + ", field '" + field +
                             "': " + what_arg),
          line_(line), field_(field) {}

    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    int line_;
    std::string field_;
};

// One layer per line: name,R,C,N,M,k,stride,pad. '#' starts a comment;
// blank lines are skipped. Numeric fields must be positive integers
// (pad may be zero) and names must be unique.
std::vector<LayerShape> parse_layer_table(std::string_view text);

// The 13 convolutional layers of the standard published VGG-16
// configuration (224 x 224 input, 3 x 3 kernels, stride 1, pad 1).
std::vector<LayerShape> vgg16_conv_layers();

} // namespace cipusim

#endif
