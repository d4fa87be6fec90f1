#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace vsumeval {

// std::mt19937_64 output is fixed by the standard; the distributions below are
// hand-written because the std:: ones are implementation-defined, and reports
// must be byte-identical across toolchains.
using RandomEngine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a over the bytes of `text`.
std::uint64_t stable_hash(std::string_view text);

/// Per-(trial, video) seed. Trials never share a stream, so adding trials or
/// changing the worker count leaves existing trials untouched.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial, std::string_view video_id);

/// Seed for a fixed purpose keyed only by video (segmentation that is shared
/// by all trials, synthetic data generation, ...).
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view purpose, std::string_view video_id);

/// Uniform in [0, 1) with 53 random bits.
double uniform01(RandomEngine& rng);

/// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
std::uint64_t uniform_below(RandomEngine& rng, std::uint64_t bound);

/// Poisson(lambda) by Knuth's product method. Intended for the moderate rates
/// used for segment lengths (lambda up to a few hundred).
std::uint64_t poisson(RandomEngine& rng, double lambda);

/// Standard normal via Box-Muller (one value per call).
double standard_normal(RandomEngine& rng);

/// Fisher-Yates shuffle driven by uniform_below.
template <typename RandomIt>
void shuffle(RandomIt first, RandomIt last, RandomEngine& rng) {
  const auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    const auto j = uniform_below(rng, i);
    using std::swap;
    swap(first[static_cast<std::ptrdiff_t>(i - 1)], first[static_cast<std::ptrdiff_t>(j)]);
  }
}

}  // namespace vsumeval
