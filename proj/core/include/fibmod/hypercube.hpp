#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fibmod/error.hpp"

namespace fibmod {

using Shape = std::vector<std::size_t>;
using Index = std::vector<std::uint64_t>;

/// Dense p-dimensional array stored with axis 1 varying fastest.
template <typename T>
class Hypercube {
 public:
  Hypercube() = default;

  Hypercube(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != volume(shape_))
      fail(Errc::InvalidArgument, "hypercube data size " + std::to_string(data_.size()) +
                                      " does not match shape volume " + std::to_string(volume(shape_)));
  }

  template <typename Fn>
  static Hypercube generate(Shape shape, Fn&& fn) {
    const std::size_t n = volume(shape);
    std::vector<T> data;
    data.reserve(n);
    Index idx(shape.size(), 0);
    for (std::size_t flat = 0; flat < n; ++flat) {
      data.push_back(fn(static_cast<const Index&>(idx)));
      increment(idx, shape);
    }
    return Hypercube(std::move(shape), std::move(data));
  }

  static std::size_t volume(const Shape& shape) {
    std::size_t v = 1;
    for (auto s : shape) v *= s;
    return v;
  }

  /// Steps `idx` to the next position in axis-1-fastest order.
  static void increment(Index& idx, const Shape& shape) {
    for (std::size_t axis = 0; axis < shape.size(); ++axis) {
      if (++idx[axis] < shape[axis]) return;
      idx[axis] = 0;
    }
  }

  const Shape& shape() const noexcept { return shape_; }
  std::size_t dims() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  const std::vector<T>& data() const noexcept { return data_; }

  std::size_t offset(std::span<const std::uint64_t> idx) const {
    if (idx.size() != shape_.size()) fail(Errc::InvalidArgument, "hypercube index has wrong dimension");
    std::size_t off = 0, stride = 1;
    for (std::size_t axis = 0; axis < shape_.size(); ++axis) {
      if (idx[axis] >= shape_[axis]) fail(Errc::InvalidArgument, "hypercube index out of range");
      off += static_cast<std::size_t>(idx[axis]) * stride;
      stride *= shape_[axis];
    }
    return off;
  }

  Index unravel(std::size_t flat) const {
    Index idx(shape_.size());
    for (std::size_t axis = 0; axis < shape_.size(); ++axis) {
      idx[axis] = flat % shape_[axis];
      flat /= shape_[axis];
    }
    return idx;
  }

  const T& at(std::span<const std::uint64_t> idx) const { return data_[offset(idx)]; }
  T& at(std::span<const std::uint64_t> idx) { return data_[offset(idx)]; }
  const T& operator[](std::size_t flat) const { return data_[flat]; }
  T& operator[](std::size_t flat) { return data_[flat]; }

  friend bool operator==(const Hypercube&, const Hypercube&) = default;

 private:
  Shape shape_;
  std::vector<T> data_;
};

}  // namespace fibmod
