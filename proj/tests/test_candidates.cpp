#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "witcount/candidates.hpp"
#include "witcount/errors.hpp"
#include "witcount/oracle.hpp"

using namespace witcount;
using witcount::testing::ints;
using witcount::testing::make_instance;

namespace {
CandidateProfile candidates_of(const Instance& inst) {
    return count_candidates_profile(build_char_table(inst), inst.target, inst.k);
}
}  // namespace

TEST_CASE("candidate profile examples (frozen from tuple enumeration)") {
    CHECK(candidates_of(make_instance(1, {0, 1}, 0, 2)).counts == ints({1, 1, 2}));
    CHECK(candidates_of(make_instance(2, {1, 2, 3}, 0, 3)).counts == ints({1, 0, 3, 6}));
    CHECK(candidates_of(make_instance(2, {1, 2, 3}, 1, 3)).counts == ints({0, 1, 2, 7}));
}

TEST_CASE("base cases: counts[0] = [t = 0], counts[1] = chi_V(t)") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto inst = witcount::testing::random_small_instance(rng, 8, 256, 3);
        const auto chi = build_char_table(inst);
        const auto c = count_candidates_profile(chi, inst.target, std::max(inst.k, 1));
        CHECK(c.counts[0] == (inst.target.index == 0 ? 1 : 0));
        CHECK(c.counts[1] == chi.values[inst.target.index]);
    }
}

TEST_CASE("k = 0 needs no transform") {
    const OpCounter ops;
    CHECK(candidates_of(make_instance(3, {1, 2}, 0, 0)).counts == ints({1}));
    CHECK(candidates_of(make_instance(3, {1, 2}, 5, 0)).counts == ints({0}));
    CHECK(ops.count() == 0);
}

TEST_CASE("contract violations") {
    const auto chi = build_char_table(make_instance(2, {1}, 0, 0));
    CHECK_THROWS_AS(count_candidates_profile(chi, GF2Vector{4}, 1), ContractError);
    CHECK_THROWS_AS(count_candidates_profile(chi, GF2Vector{0}, -1), ContractError);
}

TEST_CASE("agrees with tuple enumeration on random instances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        auto inst = witcount::testing::random_small_instance(rng, 6, 20, 5);
        const auto expected = oracle::brute_force_profile(inst);
        CHECK(candidates_of(inst).counts == expected.cand);
    }
}

TEST_CASE("sum over all targets is m^i and each count lies in [0, m^i]") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = witcount::testing::random_small_instance(rng, 7, 128, 6);
        const auto chi = build_char_table(inst);
        const auto rows = candidate_tables_full(chi, inst.k);
        REQUIRE(rows.size() == static_cast<std::size_t>(inst.k) + 1);
        Integer m_pow = 1;
        for (int i = 0; i <= inst.k; ++i) {
            Integer total = 0;
            for (const auto& c : rows[static_cast<std::size_t>(i)].values()) {
                CHECK(c >= 0);
                CHECK(c <= m_pow);
                total += c;
            }
            CHECK(total == m_pow);
            m_pow *= static_cast<unsigned long>(inst.m());
        }
        // Point evaluation matches the full inverse at every target.
        for (std::uint64_t t = 0; t < chi.size(); t += 1 + chi.size() / 8) {
            const auto c = count_candidates_profile(chi, GF2Vector{t}, inst.k);
            for (int i = 0; i <= inst.k; ++i)
                CHECK(c.counts[static_cast<std::size_t>(i)] == rows[static_cast<std::size_t>(i)][t]);
        }
    }
}

TEST_CASE("threads give identical profiles") {
    std::mt19937_64 rng(31);
    const auto inst = random_instance(rng, 12, 1500, 5);
    const auto chi = build_char_table(inst);
    const auto seq = count_candidates_profile(chi, inst.target, inst.k);
    for (unsigned threads : {2u, 4u, 7u})
        CHECK(count_candidates_profile(chi, inst.target, inst.k, ExecOptions{threads}).counts == seq.counts);
}

TEST_CASE("operation count follows 2^d d + (k - 1) 2^d + k (2^d + 1)") {
    for (int d : {4, 8, 11})
        for (int k : {1, 2, 5}) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(d * 10 + k));
            const auto inst = random_instance(rng, d, std::uint64_t{1} << (d - 1), k);
            const auto chi = build_char_table(inst);
            const OpCounter ops;
            (void)count_candidates_profile(chi, inst.target, k);
            const std::uint64_t n = std::uint64_t{1} << d;
            const auto ku = static_cast<std::uint64_t>(k);
            CHECK(ops.count() == n * static_cast<std::uint64_t>(d) + (ku - 1) * n + ku * (n + 1));
        }
}
