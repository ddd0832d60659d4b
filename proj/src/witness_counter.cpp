#include "witcount/witness_counter.hpp"

#include <chrono>
#include <string>

#include "witcount/errors.hpp"

namespace witcount {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

WitnessProfile run_recurrence(const CandidateProfile& cand, const ParityTables& tables, std::uint64_t m) {
    const int k = cand.k();
    WitnessProfile out;
    out.cand = cand.counts;
    out.fail.assign(static_cast<std::size_t>(k) + 1, Integer(0));
    out.wit.assign(static_cast<std::size_t>(k) + 1, Integer(0));

    for (int kp = 0; kp <= k; ++kp) {
        const auto i = static_cast<std::size_t>(kp);
        out.fail[i] = count_failures(out.wit, tables, m, kp);
        out.wit[i] = out.cand[i];
        arith::sub(out.wit[i], out.fail[i]);
        if (out.wit[i] < 0)
            throw ExactnessError("negative witness count at k=" + std::to_string(kp) + ": " + out.wit[i].get_str());
        if (!mpz_divisible_p(out.wit[i].get_mpz_t(), tables.factorials[i].get_mpz_t()))
            throw ExactnessError("witness count at k=" + std::to_string(kp) + " is not divisible by " +
                                 std::to_string(kp) + "!");
    }
    return out;
}

}  // namespace

Integer falling_factorial(std::uint64_t m, std::uint64_t o, std::uint64_t e) {
    Integer result(1);
    if (e == 0) return result;
    if (o > m || m - o < e) return Integer(0);
    for (std::uint64_t j = 0; j < e; ++j) arith::mul(result, m - o - j);
    return result;
}

Integer count_failures(const std::vector<Integer>& wit, const ParityTables& tables, std::uint64_t m, int kp) {
    if (kp > tables.k) throw ContractError("parity tables built for k=" + std::to_string(tables.k));
    if (static_cast<int>(wit.size()) < kp) throw ContractError("witness counts below kp are missing");
    Integer total(0);
    // Only o with o = kp (mod 2) and 2e + o <= kp can have partitions.
    for (int odd = kp % 2; odd < kp; odd += 2) {
        const Integer& wit_odd = wit[static_cast<std::size_t>(odd)];
        if (wit_odd == 0) continue;
        for (int even = 0; even + odd < kp && 2 * even + odd <= kp; ++even) {
            Integer term = unordered_parity_count(tables, even, odd, kp);
            if (term == 0) continue;
            const Integer ways = falling_factorial(m, static_cast<std::uint64_t>(odd), static_cast<std::uint64_t>(even));
            if (ways == 0) continue;
            arith::mul(term, ways);
            arith::add_product(total, term, wit_odd);
        }
    }
    return total;
}

WitnessProfile witnesses_from_candidates(const CandidateProfile& cand, std::uint64_t m) {
    const ParityTables tables(cand.k());
    return run_recurrence(cand, tables, m);
}

WitnessProfile count_witnesses(const Instance& inst, const ExecOptions& exec, PhaseTimes* times) {
    validate(inst, kHardMaxDimension);
    auto start = Clock::now();
    const CandidateProfile cand = count_candidates_profile(build_char_table(inst), inst.target, inst.k, exec);
    if (times) times->candidates_ms = ms_since(start);

    start = Clock::now();
    const ParityTables tables(inst.k);
    if (times) times->parity_ms = ms_since(start);

    start = Clock::now();
    auto profile = run_recurrence(cand, tables, inst.m());
    if (times) times->recurrence_ms = ms_since(start);
    return profile;
}

}  // namespace witcount
