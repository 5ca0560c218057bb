#include "cipusim/tensor.hpp"

#include <numeric>
#include <stdexcept>

namespace cipusim {

Tensor::Tensor(std::vector<int> dims, int width) : dims_(std::move(dims)), width_(width) {
    if (dims_.size() != 3 && dims_.size() != 4)
        throw std::invalid_argument("tensor rank must be 3 or 4");
    std::size_t total = 1;
    for (int d : dims_) {
        if (d < 1) throw std::invalid_argument("tensor dimensions must be positive");
        total *= static_cast<std::size_t>(d);
    }
    if (width < 2 || width > 24)
        throw std::invalid_argument("tensor width must be in [2, 24]");
    data_.assign(total, 0);
}

Tensor Tensor::feature_map(int channels, int rows, int cols, int width) {
    return Tensor({channels, rows, cols}, width);
}

Tensor Tensor::kernels(int out_ch, int in_ch, int kernel, int width) {
    return Tensor({out_ch, in_ch, kernel, kernel}, width);
}

std::size_t Tensor::index3(int c, int r, int col) const {
    if (dims_.size() != 3)
        throw std::invalid_argument("3-index access on a rank-4 tensor");
    if (c < 0 || c >= dims_[0] || r < 0 || r >= dims_[1] || col < 0 || col >= dims_[2])
        throw std::out_of_range("tensor index out of range");
    return (static_cast<std::size_t>(c) * dims_[1] + r) * dims_[2] + col;
}

std::size_t Tensor::index4(int o, int i, int r, int col) const {
    if (dims_.size() != 4)
        throw std::invalid_argument("4-index access on a rank-3 tensor");
    if (o < 0 || o >= dims_[0] || i < 0 || i >= dims_[1] || r < 0 || r >= dims_[2] ||
        col < 0 || col >= dims_[3])
        throw std::out_of_range("tensor index out of range");
    return ((static_cast<std::size_t>(o) * dims_[1] + i) * dims_[2] + r) * dims_[3] + col;
}

std::int32_t& Tensor::at(int c, int r, int col) { return data_[index3(c, r, col)]; }
std::int32_t Tensor::at(int c, int r, int col) const { return data_[index3(c, r, col)]; }
std::int32_t& Tensor::at(int o, int i, int r, int col) { return data_[index4(o, i, r, col)]; }
std::int32_t Tensor::at(int o, int i, int r, int col) const { return data_[index4(o, i, r, col)]; }

std::int32_t Tensor::padded(int c, int r, int col) const {
    if (r < 0 || r >= dims_[1] || col < 0 || col >= dims_[2]) return 0;
    return at(c, r, col);
}

AccumTensor::AccumTensor(int channels_, int rows_, int cols_, int scale_log2_)
    : channels(channels_), rows(rows_), cols(cols_), scale_log2(scale_log2_),
      data(static_cast<std::size_t>(channels_) * rows_ * cols_, 0) {
    if (channels < 1 || rows < 1 || cols < 1)
        throw std::invalid_argument("accumulator dimensions must be positive");
}

std::int64_t& AccumTensor::at(int c, int r, int col) {
    return data[(static_cast<std::size_t>(c) * rows + r) * cols + col];
}

std::int64_t AccumTensor::at(int c, int r, int col) const {
    return data[(static_cast<std::size_t>(c) * rows + r) * cols + col];
}

} // namespace cipusim
