#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "jamsim/types.hpp"

namespace jamsim {

// Stateless seed mixing so every consumer (grid, noise, sweeps) gets an
// independent substream from one master seed, regardless of evaluation order.
uint64_t splitmix64(uint64_t x);
uint64_t mix_seed(uint64_t master, std::string_view purpose, uint64_t index);

/// Deterministic Gaussian source. Box-Muller on explicit 53-bit uniforms so
/// streams are bit-identical across standard library implementations
/// (std::normal_distribution makes no such guarantee).
class GaussianGen {
 public:
  explicit GaussianGen(uint64_t seed) : eng_(seed) {}

  double uniform01();          // in [0, 1)
  double normal();             // standard normal
  cd complex_normal(double variance);  // circular, E|z|^2 = variance

 private:
  std::mt19937_64 eng_;
};

}  // namespace jamsim
