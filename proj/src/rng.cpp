#include "jamsim/rng.hpp"

#include <cmath>

namespace jamsim {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t mix_seed(uint64_t master, std::string_view purpose, uint64_t index) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the purpose tag
  for (unsigned char c : purpose) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(master ^ h) ^ index);
}

double GaussianGen::uniform01() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double GaussianGen::normal() {
  double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

cd GaussianGen::complex_normal(double variance) {
  if (variance <= 0.0) return {0.0, 0.0};
  double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = uniform01();
  double r = std::sqrt(-variance * std::log(u1));
  return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
}

}  // namespace jamsim
