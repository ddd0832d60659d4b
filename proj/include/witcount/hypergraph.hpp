#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "witcount/arith.hpp"
#include "witcount/instance.hpp"
#include "witcount/parallel.hpp"

namespace witcount {

// An l-uniform hypergraph on vertices 0..n-1.
struct Hypergraph {
    int n = 0;
    int l = 2;
    std::vector<std::vector<int>> edges;
};

inline constexpr int kMaxHypergraphVertices = 63;
inline constexpr int kMaxBruteForceVertices = 40;

// Throws ContractError on a bad edge size, out-of-range or repeated vertex,
// or a repeated edge.
void validate(const Hypergraph& g);

// Format: "n=<int> l=<int>" then one edge per line as space-separated
// vertex indices. '#' comments and blank lines are ignored.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& g);

// Returned by the reduction when l does not divide n; no perfect matching exists.
struct NoInstance {
    std::string reason;
};

using Reduction = std::variant<Instance, NoInstance>;

// d = n, V = edge indicator vectors, t = all ones, k = n / l.
Reduction reduce_to_witness_instance(const Hypergraph& g);

// |PM(G)| = wit[k] / k! on the reduced instance.
Integer count_perfect_matchings(const Hypergraph& g, int max_d = kDefaultMaxDimension,
                                const ExecOptions& exec = {});

// Backtracking over edges covering the lowest uncovered vertex.
Integer brute_force_matchings(const Hypergraph& g);

}  // namespace witcount
