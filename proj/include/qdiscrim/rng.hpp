// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace qdiscrim {

// Counter-based generator in the splitmix64 family. Draw k is a pure
// function of (seed, k), so independent ranges of draws can be taken
// on different threads or machines and still agree bit for bit.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t word_at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53 significant bits
  static double unit_at(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(word_at(seed, counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_word() { return word_at(seed_, counter_++); }
  double next_unit() { return static_cast<double>(next_word() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace qdiscrim
