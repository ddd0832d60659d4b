#pragma once

#include <cstdint>
#include <vector>

#include "witcount/arith.hpp"
#include "witcount/candidates.hpp"
#include "witcount/instance.hpp"
#include "witcount/parallel.hpp"
#include "witcount/partition_parity.hpp"

namespace witcount {

// Counts for every i <= k: candidates, failures (candidates repeating an
// entry) and witnesses (ordered tuples of pairwise-distinct vectors).
struct WitnessProfile {
    std::vector<Integer> cand;
    std::vector<Integer> fail;
    std::vector<Integer> wit;

    int k() const { return static_cast<int>(wit.size()) - 1; }
    friend bool operator==(const WitnessProfile&, const WitnessProfile&) = default;
};

// m (m-1) ... (m-o-e+1) restricted to the last e factors, i.e. the number of
// ways to pick e further distinct vectors once o are taken. Product form, so
// it is 0 rather than undefined when m - o < e.
Integer falling_factorial(std::uint64_t m, std::uint64_t o, std::uint64_t e);

// Failure count for kp given wit[0..kp-1]: sum over partition shapes (e, o)
// with e + o < kp of  #partitions(e, o) * falling(m, o, e) * wit[o].
Integer count_failures(const std::vector<Integer>& wit, const ParityTables& tables, std::uint64_t m, int kp);

// Runs the correction recurrence on a precomputed candidate profile.
WitnessProfile witnesses_from_candidates(const CandidateProfile& cand, std::uint64_t m);

struct PhaseTimes {
    double candidates_ms = 0;
    double parity_ms = 0;
    double recurrence_ms = 0;
};

WitnessProfile count_witnesses(const Instance& inst, const ExecOptions& exec = {}, PhaseTimes* times = nullptr);

}  // namespace witcount
