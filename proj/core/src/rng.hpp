#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "psq/bijection.hpp"

namespace psq::detail {

// Seeded source with draws defined only in terms of raw mt19937_64 output,
// so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  Bijection permutation(int sigma) {
    std::vector<Symbol> image(static_cast<std::size_t>(sigma));
    std::iota(image.begin(), image.end(), Symbol{0});
    for (std::size_t i = image.size(); i > 1; --i) std::swap(image[i - 1], image[below(i)]);
    return Bijection(std::move(image));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace psq::detail
