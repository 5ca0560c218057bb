#ifndef CIPUSIM_TENSOR_HPP
#define CIPUSIM_TENSOR_HPP

#include <cstdint>
#include <vector>

#include "cipusim/fixed_point.hpp"

namespace cipusim {

// Dense fixed-point tensor, either a (channels, rows, cols) feature map or
// an (out_ch, in_ch, k, k) kernel stack. Entries share one bit width and
// are stored as raw integers scaled by 2^-(width-1).
class Tensor {
public:
    Tensor() = default;
    Tensor(std::vector<int> dims, int width);

    static Tensor feature_map(int channels, int rows, int cols, int width);
    static Tensor kernels(int out_ch, int in_ch, int kernel, int width);

    const std::vector<int>& dims() const { return dims_; }
    int width() const { return width_; }
    std::size_t size() const { return data_.size(); }

    std::int32_t& at(int c, int r, int col);
    std::int32_t at(int c, int r, int col) const;
    std::int32_t& at(int o, int i, int r, int col);
    std::int32_t at(int o, int i, int r, int col) const;

    // Zero outside the spatial bounds (the padding region).
    std::int32_t padded(int c, int r, int col) const;

    FixedPoint element(std::size_t flat) const { return FixedPoint(data_[flat], width_); }
    std::vector<std::int32_t>& raw() { return data_; }
    const std::vector<std::int32_t>& raw() const { return data_; }

private:
    std::size_t index3(int c, int r, int col) const;
    std::size_t index4(int o, int i, int r, int col) const;

    std::vector<int> dims_;
    int width_ = 8;
    std::vector<std::int32_t> data_;
};

// Wide-integer accumulator tensor (channels, rows, cols). Values carry
// scale 2^-scale_log2 relative to the stored integers, so outputs stay
// exact instead of being re-quantized.
struct AccumTensor {
    int channels = 0, rows = 0, cols = 0;
    int scale_log2 = 0;
    std::vector<std::int64_t> data;

    AccumTensor() = default;
    AccumTensor(int channels_, int rows_, int cols_, int scale_log2_);

    std::int64_t& at(int c, int r, int col);
    std::int64_t at(int c, int r, int col) const;

    bool operator==(const AccumTensor&) const = default;
};

} // namespace cipusim

#endif
