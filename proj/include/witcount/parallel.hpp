#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "witcount/arith.hpp"

namespace witcount {

struct ExecOptions {
    unsigned threads = 1;
};

namespace detail {

// Runs body(begin, end) over [0, n) split into contiguous chunks, one per
// worker. Operation tallies from the workers are folded back into the
// calling thread so OpCounter sees the same total as a sequential run.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
    const std::size_t workers = threads <= 1 || n < 2 ? 1 : std::min<std::size_t>(threads, n);
    if (workers == 1) {
        body(std::size_t{0}, n);
        return;
    }
    std::vector<std::uint64_t> tallies(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t lo = std::min(n, w * chunk), hi = std::min(n, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            const std::uint64_t before = arith::op_tally;
            try {
                body(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
            tallies[w] = arith::op_tally - before;
        });
    }
    try {
        body(std::size_t{0}, std::min(n, chunk));
    } catch (...) {
        errors[0] = std::current_exception();
    }
    for (auto& t : pool) t.join();
    for (std::size_t w = 1; w < workers; ++w) arith::op_tally += tallies[w];
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace detail
}  // namespace witcount
