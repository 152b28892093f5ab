#pragma once

#include <cstdint>
#include <random>

#include "koopman/types.hpp"

namespace koopman {

// Seeded uniform generator with a platform-independent bit stream.
// std::uniform_real_distribution is implementation-defined, so doubles are
// built directly from the top 53 bits of mt19937_64 output.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in [0, 1).
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform point in [0,1)^dim.
  Vec next_point(int dim) {
    Vec x(dim);
    for (int i = 0; i < dim; ++i) x[i] = next();
    return x;
  }

  /// n x dim matrix of uniform draws, row-major fill order.
  Mat next_points(int n, int dim) {
    Mat pts(n, dim);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < dim; ++j) pts(i, j) = next();
    return pts;
  }

  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace koopman
