#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "witcount/hypergraph.hpp"
#include "witcount/instance.hpp"
#include "witcount/witness_counter.hpp"

namespace witcount {

// Result of `count` / `candidates`. Big integers travel as decimal strings.
struct RunReport {
    std::string command;
    int d = 0;
    std::uint64_t m = 0;
    int k = 0;
    std::string target;
    WitnessProfile profile;      // `candidates` fills only profile.cand
    bool cumulative = false;     // add prefix sums of wit
    std::vector<std::pair<std::string, double>> timing_ms;
    std::uint64_t op_count = 0;
};

struct MatchingReport {
    int n = 0;
    int l = 0;
    std::size_t edges = 0;
    std::optional<Instance> reduced;  // empty for the no-instance case
    Integer count;
    std::string reason;               // set when no reduced instance exists
    std::vector<std::pair<std::string, double>> timing_ms;
    std::uint64_t op_count = 0;
};

// Prefix sums: entry i counts witnesses with at most i vectors.
std::vector<Integer> cumulative_sums(const std::vector<Integer>& xs);

nlohmann::json to_json(const RunReport& r);
nlohmann::json to_json(const MatchingReport& r);
std::string to_plain(const RunReport& r);
std::string to_plain(const MatchingReport& r);

// Recovers the exact profile arrays from a `count` report.
WitnessProfile profile_from_json(const nlohmann::json& j);

}  // namespace witcount
