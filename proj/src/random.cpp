#include "vsumeval/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vsumeval {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial, std::string_view video_id) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ splitmix64(trial + 0x5452494131ULL));
  return splitmix64(h ^ stable_hash(video_id));
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view purpose, std::string_view video_id) {
  std::uint64_t h = splitmix64(master_seed ^ 0xA5A5A5A5A5A5A5A5ULL);
  h = splitmix64(h ^ stable_hash(purpose));
  return splitmix64(h ^ stable_hash(video_id));
}

double uniform01(RandomEngine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(RandomEngine& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t poisson(RandomEngine& rng, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("poisson: lambda must be positive");
  const double threshold = std::exp(-lambda);
  std::uint64_t k = 0;
  double p = uniform01(rng);
  while (p > threshold) {
    ++k;
    p *= uniform01(rng);
  }
  return k;
}

double standard_normal(RandomEngine& rng) {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace vsumeval
