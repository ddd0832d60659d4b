#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "witcount/instance.hpp"

namespace witcount {

// Uniform integer in [0, n) by rejection on the raw 64-bit stream, so the
// draw sequence depends only on the engine and not on the standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// m distinct vectors of F_2^d drawn uniformly without replacement (partial
// Fisher-Yates over all 2^d indices), in draw order.
std::vector<GF2Vector> sample_distinct_vectors(std::mt19937_64& rng, int d, std::uint64_t m);

// Random instance with the given shape; the target is uniform over F_2^d.
Instance random_instance(std::mt19937_64& rng, int d, std::uint64_t m, int k);

}  // namespace witcount
