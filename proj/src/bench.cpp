#include "witcount/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "witcount/errors.hpp"
#include "witcount/random_instance.hpp"
#include "witcount/witness_counter.hpp"

namespace witcount {

BenchRow bench_one(const BenchConfig& cfg, int d) {
    if (d < 0 || d > cfg.max_d || cfg.max_d > kHardMaxDimension)
        throw CapacityError("dimension d=" + std::to_string(d) + " exceeds the cap of " + std::to_string(cfg.max_d));
    if (cfg.k < 0) throw ContractError("k must be non-negative");
    const std::uint64_t n = std::uint64_t{1} << d;
    const std::uint64_t m = cfg.m ? *cfg.m : static_cast<std::uint64_t>(std::floor(cfg.density * static_cast<double>(n)));
    if (m > n) throw ContractError("m=" + std::to_string(m) + " exceeds 2^" + std::to_string(d));

    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(d));
    const Instance inst = random_instance(rng, d, m, cfg.k);

    const OpCounter ops;
    const auto start = std::chrono::steady_clock::now();
    (void)count_witnesses(inst, cfg.exec);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return BenchRow{d, m, cfg.k, std::chrono::duration<double, std::milli>(elapsed).count(), ops.count()};
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg, const std::function<void(const BenchRow&)>& on_row) {
    std::vector<BenchRow> rows;
    for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
        rows.push_back(bench_one(cfg, d));
        if (on_row) on_row(rows.back());
    }
    return rows;
}

std::string bench_csv_header() { return "d,m,k,wall_ms,op_count"; }

std::string bench_csv_row(const BenchRow& row) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << row.d << ',' << row.m << ',' << row.k << ',' << row.wall_ms << ',' << row.op_count;
    return os.str();
}

}  // namespace witcount
