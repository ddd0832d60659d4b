#include <doctest.h>

#include <map>
#include <utility>

#include "witcount/errors.hpp"
#include "witcount/oracle.hpp"
#include "witcount/partition_parity.hpp"

using namespace witcount;

TEST_CASE("binomial table satisfies Pascal's rule") {
    const BinomialTable c(12);
    for (int s = 0; s <= 12; ++s) {
        CHECK(c(s, 0) == 1);
        CHECK(c(s, s) == 1);
        for (int p = 1; p < s; ++p) CHECK(c(s, p) == c(s - 1, p - 1) + c(s - 1, p));
    }
    CHECK(c(12, 6) == 924);
}

TEST_CASE("ordered parity table examples") {
    const auto t = build_parity_tables(4);
    CHECK(t.ordered(0, 0, 0) == 1);
    CHECK(t.ordered(2, 1, 0) == 1);
    CHECK(t.ordered(2, 0, 2) == 2);  // ({1},{2}) and ({2},{1})
    CHECK(t.ordered(2, 0, 1) == 0);
    CHECK(t.ordered(4, 2, 0) == 6);  // 3 pairings, 2! orders each
    int nonzero_at_two = 0;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 4; ++y) nonzero_at_two += t.ordered(2, x, y) != 0;
    CHECK(nonzero_at_two == 2);
}

TEST_CASE("unordered_parity_count examples") {
    const auto t = build_parity_tables(8);
    CHECK(unordered_parity_count(t, 1, 0, 2) == 1);
    CHECK(unordered_parity_count(t, 2, 0, 4) == 3);
    CHECK(unordered_parity_count(t, 0, 1, 3) == 1);
    CHECK(unordered_parity_count(t, 1, 1, 3) == 3);
    CHECK(unordered_parity_count(t, 0, 0, 0) == 1);
    CHECK(unordered_parity_count(t, 0, 0, 3) == 0);
    CHECK_THROWS_AS(unordered_parity_count(t, 0, 1, 9), ContractError);
}

TEST_CASE("zero pattern: 2e + o > kp or o of the wrong parity") {
    const int k = 10;
    const auto t = build_parity_tables(k);
    for (int s = 0; s <= k; ++s)
        for (int e = 0; e <= k; ++e)
            for (int o = 0; o <= k; ++o)
                if (2 * e + o > s || (o - s) % 2 != 0) {
                    CHECK(t.ordered(s, e, o) == 0);
                    CHECK(unordered_parity_count(t, e, o, s) == 0);
                }
}

TEST_CASE("matches partition enumeration classified by parity signature") {
    const auto t = build_parity_tables(8);
    for (int kp = 0; kp <= 8; ++kp) {
        std::map<std::pair<int, int>, long> counts;
        const auto partitions = oracle::enumerate_partitions(kp);
        for (const auto& p : partitions) {
            int even = 0, odd = 0;
            for (const auto& cls : p) (cls.size() % 2 == 0 ? even : odd) += 1;
            ++counts[{even, odd}];
        }
        Integer total = 0;
        for (int e = 0; e <= kp; ++e)
            for (int o = 0; o <= kp; ++o) {
                const auto it = counts.find({e, o});
                const long expected = it == counts.end() ? 0 : it->second;
                CHECK_MESSAGE(unordered_parity_count(t, e, o, kp) == expected, "kp=" << kp << " e=" << e << " o=" << o);
                total += unordered_parity_count(t, e, o, kp);
            }
        CHECK(total == static_cast<long>(partitions.size()));  // Bell(kp)
    }
}

TEST_CASE("table building stays within O(k^4) operations") {
    for (int k : {4, 8, 16, 24}) {
        const OpCounter ops;
        (void)build_parity_tables(k);
        const auto k4 = static_cast<std::uint64_t>(k) * k * k * k;
        CHECK(ops.count() <= k4 + 10);
    }
}
