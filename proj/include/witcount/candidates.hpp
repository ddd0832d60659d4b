#pragma once

#include <vector>

#include "witcount/arith.hpp"
#include "witcount/instance.hpp"
#include "witcount/parallel.hpp"
#include "witcount/wht.hpp"

namespace witcount {

// counts[i] = number of ordered i-tuples over V (repeats allowed) summing to t.
struct CandidateProfile {
    std::vector<Integer> counts;

    int k() const { return static_cast<int>(counts.size()) - 1; }
};

// One forward transform of chi_V, then running pointwise powers. For each i
// the value at t is read off the i-th power without a full inverse
// transform: sum_x (-1)^<t,x> p_i[x] / 2^d.
CandidateProfile count_candidates_profile(const CharTable& chi, GF2Vector target, int k,
                                          const ExecOptions& exec = {});

// Debug route: full inverse transform of every power. Row i holds the
// candidate counts for every target at once (row 0 is the indicator of 0).
std::vector<Spectrum> candidate_tables_full(const CharTable& chi, int k, const ExecOptions& exec = {});

}  // namespace witcount
