#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"
#include "witcount/errors.hpp"
#include "witcount/oracle.hpp"

using namespace witcount;
using witcount::testing::ints;
using witcount::testing::make_instance;

TEST_CASE("brute_force_profile examples") {
    const auto p = oracle::brute_force_profile(make_instance(2, {1, 2, 3}, 0, 3));
    CHECK(p.wit == ints({1, 0, 0, 6}));
    CHECK(p.cand == ints({1, 0, 3, 6}));

    const auto empty = oracle::brute_force_profile(make_instance(3, {}, 5, 4));
    CHECK(empty.cand == ints({0, 0, 0, 0, 0}));
    CHECK(empty.wit == ints({0, 0, 0, 0, 0}));

    CHECK(oracle::brute_force_profile(make_instance(3, {1, 2}, 0, 0)).wit == ints({1}));
}

TEST_CASE("brute_force_profile refuses large enumerations") {
    Instance inst;
    inst.d = 10;
    inst.k = 5;
    for (std::uint64_t x = 0; x < 30; ++x) inst.vectors.push_back(GF2Vector{x});  // 30^5 > 10^7
    CHECK_THROWS_AS(oracle::brute_force_profile(inst), GuardError);
    inst.k = 4;  // 30^4 = 810000
    CHECK_NOTHROW(oracle::brute_force_profile(inst));
}

TEST_CASE("naive_dp_witnesses examples") {
    CHECK(oracle::naive_dp_witnesses(make_instance(2, {1, 2, 3}, 0, 3)) == 6);
    CHECK(oracle::naive_dp_witnesses(make_instance(3, {1, 6}, 6, 1)) == 1);
    CHECK(oracle::naive_dp_witnesses(make_instance(3, {1, 6}, 7, 1)) == 0);
    CHECK(oracle::naive_dp_witnesses(make_instance(3, {1, 6}, 7, 3)) == 0);
    CHECK(oracle::naive_dp_witnesses(make_instance(3, {1, 6}, 0, 0)) == 1);
    CHECK(oracle::naive_dp_witnesses(make_instance(3, {1, 6}, 7, 2)) == 2);
}

TEST_CASE("naive_dp_witnesses refuses oversized tables") {
    Instance inst;
    inst.d = 16;
    inst.k = 4;
    for (std::uint64_t x = 0; x < 100; ++x) inst.vectors.push_back(GF2Vector{x});
    CHECK_THROWS_AS(oracle::naive_dp_witnesses(inst), GuardError);
}

TEST_CASE("the two witness oracles agree") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 80; ++trial) {
        const auto inst = witcount::testing::random_small_instance(rng, 6, 15, 5);
        CHECK(oracle::brute_force_profile(inst).wit.back() == oracle::naive_dp_witnesses(inst));
    }
}

TEST_CASE("enumerate_partitions examples") {
    CHECK(oracle::enumerate_partitions(0).size() == 1);
    CHECK(oracle::enumerate_partitions(1) == std::vector<oracle::Partition>{{{1}}});
    // Restricted growth order: labels 00 then 01.
    CHECK(oracle::enumerate_partitions(2) == std::vector<oracle::Partition>{{{1, 2}}, {{1}, {2}}});
    CHECK(oracle::enumerate_partitions(4).size() == 15);
    CHECK_THROWS_AS(oracle::enumerate_partitions(11), GuardError);
}

TEST_CASE("enumerated partitions are valid, canonical and distinct") {
    for (int kp = 1; kp <= 8; ++kp) {
        const auto parts = oracle::enumerate_partitions(kp);
        std::set<oracle::Partition> unique(parts.begin(), parts.end());
        CHECK(unique.size() == parts.size());
        for (const auto& p : parts) {
            std::vector<int> seen(static_cast<std::size_t>(kp) + 1, 0);
            int last_min = 0;
            for (const auto& cls : p) {
                REQUIRE(!cls.empty());
                CHECK(cls.front() > last_min);
                last_min = cls.front();
                CHECK(std::is_sorted(cls.begin(), cls.end()));
                for (int x : cls) ++seen[static_cast<std::size_t>(x)];
            }
            for (int x = 1; x <= kp; ++x) CHECK(seen[static_cast<std::size_t>(x)] == 1);
        }
    }
    // Bell numbers by the recurrence B(n+1) = sum C(n,j) B(j).
    std::vector<long> bell{1};
    for (int n = 0; n < 8; ++n) {
        long next = 0, binom = 1;
        for (int j = 0; j <= n; ++j) {
            next += binom * bell[static_cast<std::size_t>(j)];
            binom = binom * (n - j) / (j + 1);
        }
        bell.push_back(next);
    }
    for (int kp = 0; kp <= 8; ++kp)
        CHECK(static_cast<long>(oracle::enumerate_partitions(kp).size()) == bell[static_cast<std::size_t>(kp)]);
}

TEST_CASE("brute_force_convolution examples") {
    CHECK(oracle::brute_force_convolution(Spectrum(ints({1, 1})), Spectrum(ints({1, 1}))).values() == ints({2, 2}));
    CHECK(oracle::brute_force_convolution(Spectrum(ints({1, 0})), Spectrum(ints({0, 1}))).values() == ints({0, 1}));
    const Spectrum g(ints({4, -1, 0, 9}));
    CHECK(oracle::brute_force_convolution(Spectrum(ints({1, 0, 0, 0})), g) == g);
    CHECK_THROWS_AS(oracle::brute_force_convolution(Spectrum(9), Spectrum(9)), GuardError);
}
