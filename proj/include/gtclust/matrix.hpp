#pragma once

#include <cstddef>
#include <vector>

namespace gtclust {

// Dense square matrix of doubles, row-major. Deliberately minimal: the
// toolkit only ever stores full n-by-n distance and similarity tables.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), v_(n * n, fill) {}

  double operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }

  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> v_;
};

}  // namespace gtclust
