#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "witcount/instance.hpp"
#include "witcount/witness_counter.hpp"

namespace witcount {

using ProfileCounter = std::function<WitnessProfile(const Instance&)>;

// The production path: count_witnesses with default options.
WitnessProfile default_counter(const Instance& inst);

struct CheckResult {
    bool ok = true;
    std::size_t instances = 0;
    std::size_t oracle_runs = 0;
    std::string message;  // first mismatch with a full instance dump, or a summary
};

// Compares `fast` against the tuple-enumeration oracle (whole profile) and
// the naive table oracle (wit[k'] for every k' <= k), and checks the
// profile's own invariants. Throws GuardError when neither oracle accepts
// the instance.
CheckResult check_instance(const Instance& inst, const ProfileCounter& fast = default_counter);

struct RandomCheckConfig {
    std::uint64_t seed = 42;
    std::size_t count = 200;
    int d_max = 6;
    int k_max = 5;
};

// Draws d in [1, d_max], k in [0, k_max], then m uniform in [0, cap] where
// cap keeps both oracles inside their guards, then the instance itself.
CheckResult check_random(const RandomCheckConfig& cfg, const ProfileCounter& fast = default_counter);

}  // namespace witcount
