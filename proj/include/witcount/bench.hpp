#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "witcount/instance.hpp"
#include "witcount/parallel.hpp"

namespace witcount {

struct BenchConfig {
    int d_min = 16;
    int d_max = 20;
    int k = 4;
    // Fixed m for every row; otherwise m = floor(density * 2^d).
    std::optional<std::uint64_t> m;
    double density = 0.5;
    std::uint64_t seed = 1;
    int max_d = kDefaultMaxDimension;
    ExecOptions exec;
};

struct BenchRow {
    int d = 0;
    std::uint64_t m = 0;
    int k = 0;
    double wall_ms = 0;
    std::uint64_t op_count = 0;  // counted big-integer operations, generation excluded
};

// Row for dimension d: the instance comes from an engine seeded with
// seed + d, so rows do not depend on the requested range.
BenchRow bench_one(const BenchConfig& cfg, int d);

// One row per d in [d_min, d_max]; on_row (if set) sees each row as it finishes.
std::vector<BenchRow> run_bench(const BenchConfig& cfg, const std::function<void(const BenchRow&)>& on_row = {});

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace witcount
