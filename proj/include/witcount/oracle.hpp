#pragma once

#include <cstdint>
#include <vector>

#include "witcount/arith.hpp"
#include "witcount/instance.hpp"
#include "witcount/wht.hpp"
#include "witcount/witness_counter.hpp"

// Reference implementations that share no code path with the fast
// counter. Each refuses (GuardError) inputs too large to enumerate.
namespace witcount::oracle {

inline constexpr std::uint64_t kMaxEnumeratedTuples = 10'000'000;
inline constexpr std::uint64_t kMaxNaiveTableCells = std::uint64_t{1} << 24;
inline constexpr int kMaxPartitionSize = 10;
inline constexpr int kMaxConvolutionDimension = 8;

// Enumerates every i-tuple over V for i <= k in odometer order and classifies
// it directly. Requires m^k <= kMaxEnumeratedTuples.
WitnessProfile brute_force_profile(const Instance& inst);

// Table C[v][i][w]: increasing i-sequences over V (list order) ending in w
// and summing to v. Returns k! * sum_w C[t][k][w].
Integer naive_dp_witnesses(const Instance& inst);

// A partition of {1..n}: classes ordered by smallest element, elements ascending.
using Partition = std::vector<std::vector<int>>;

// All unordered partitions of {1..kp} in canonical (restricted growth) order.
std::vector<Partition> enumerate_partitions(int kp);

// Direct double sum over all pairs (v1, v2).
Spectrum brute_force_convolution(const Spectrum& f, const Spectrum& g);

}  // namespace witcount::oracle
