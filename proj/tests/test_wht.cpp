#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "witcount/errors.hpp"
#include "witcount/oracle.hpp"
#include "witcount/wht.hpp"

using namespace witcount;
using witcount::testing::ints;
using witcount::testing::random_spectrum;

TEST_CASE("fwht small examples") {
    CHECK(fwht(Spectrum(ints({1, 0}))).values() == ints({1, 1}));
    CHECK(fwht(Spectrum(ints({1, 1}))).values() == ints({2, 0}));
    CHECK(fwht(Spectrum(ints({1, 0, 0, 0}))).values() == ints({1, 1, 1, 1}));
    // Column 1 of H_2.
    CHECK(fwht(Spectrum(ints({0, 1, 0, 0}))).values() == ints({1, -1, 1, -1}));
}

TEST_CASE("inverse_fwht examples and exactness") {
    CHECK(inverse_fwht(Spectrum(ints({1, 1, 1, 1}))).values() == ints({1, 0, 0, 0}));
    CHECK(inverse_fwht(Spectrum(ints({2, 0}))).values() == ints({1, 1}));
    CHECK_THROWS_AS(inverse_fwht(Spectrum(ints({1, 0}))), ExactnessError);
}

TEST_CASE("length must be a power of two") {
    CHECK_THROWS_AS(Spectrum(ints({1, 2, 3})), ContractError);
    CHECK_THROWS_AS(Spectrum(std::vector<Integer>{}), ContractError);
    CHECK(Spectrum(ints({7})).d() == 0);
    CHECK(fwht(Spectrum(ints({7}))).values() == ints({7}));
}

TEST_CASE("xor_convolve examples (frozen from the double-sum oracle)") {
    CHECK(xor_convolve(Spectrum(ints({1, 1})), Spectrum(ints({1, 1}))).values() == ints({2, 2}));
    CHECK(xor_convolve(Spectrum(ints({0, 1, 1, 1})), Spectrum(ints({0, 1, 1, 1}))).values() == ints({3, 2, 2, 2}));
    CHECK(xor_convolve(Spectrum(ints({1, 0})), Spectrum(ints({0, 1}))).values() == ints({0, 1}));
    CHECK_THROWS_AS(xor_convolve(Spectrum(ints({1, 0})), Spectrum(ints({1, 0, 0, 0}))), ContractError);
}

TEST_CASE("delta_0 is the convolution identity") {
    std::mt19937_64 rng(1);
    for (int d = 0; d <= 6; ++d) {
        Spectrum delta(d);
        delta[0] = 1;
        const auto g = random_spectrum(rng, d, -9, 9);
        CHECK(xor_convolve(delta, g) == g);
    }
}

TEST_CASE("butterfly uses exactly 2^d * d additions/subtractions") {
    for (int d = 0; d <= 10; ++d) {
        Spectrum s(d);
        const OpCounter ops;
        fwht_inplace(s);
        CHECK(ops.count() == (std::uint64_t{1} << d) * static_cast<std::uint64_t>(d));
    }
}

TEST_CASE("transform properties on random integer vectors") {
    std::mt19937_64 rng(2024);
    for (int d = 1; d <= 8; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_spectrum(rng, d, -50, 50);
            const auto g = random_spectrum(rng, d, -50, 50);
            const auto fh = fwht(f);

            // Self-inverse up to 2^d.
            auto twice = fwht(fh);
            for (std::size_t x = 0; x < f.size(); ++x) CHECK(twice[x] == f[x] * (Integer(1) << d));
            CHECK(inverse_fwht(fh) == f);

            // Linearity.
            const long alpha = static_cast<long>(uniform_below(rng, 21)) - 10;
            const long beta = static_cast<long>(uniform_below(rng, 21)) - 10;
            Spectrum combo(d);
            for (std::size_t x = 0; x < f.size(); ++x) combo[x] = alpha * f[x] + beta * g[x];
            const auto lhs = fwht(combo);
            const auto gh = fwht(g);
            for (std::size_t x = 0; x < f.size(); ++x) CHECK(lhs[x] == alpha * fh[x] + beta * gh[x]);

            // Parseval.
            Integer energy = 0, spectral = 0;
            for (std::size_t x = 0; x < f.size(); ++x) {
                energy += f[x] * f[x];
                spectral += fh[x] * fh[x];
            }
            CHECK(spectral == energy * (Integer(1) << d));
        }
    }
}

TEST_CASE("convolution theorem agrees with the direct double sum") {
    std::mt19937_64 rng(99);
    for (int d = 1; d <= 6; ++d)
        for (int trial = 0; trial < 30; ++trial) {
            const auto f = random_spectrum(rng, d, -5, 5);
            const auto g = random_spectrum(rng, d, -5, 5);
            CHECK(xor_convolve(f, g) == oracle::brute_force_convolution(f, g));
        }
}

TEST_CASE("threaded transform is bit-identical and counts the same operations") {
    std::mt19937_64 rng(5);
    for (int d : {0, 1, 3, 9, 12}) {
        const auto f = random_spectrum(rng, d, -1000, 1000);
        OpCounter seq_ops;
        const auto seq = fwht(f);
        const auto seq_count = seq_ops.count();
        for (unsigned threads : {2u, 3u, 8u}) {
            OpCounter par_ops;
            CHECK(fwht(f, ExecOptions{threads}) == seq);
            CHECK(par_ops.count() == seq_count);
            CHECK(inverse_fwht(seq, ExecOptions{threads}) == f);
        }
    }
}

TEST_CASE("in-place and out-of-place variants agree") {
    std::mt19937_64 rng(6);
    auto f = random_spectrum(rng, 7, -3, 3);
    const auto out = fwht(f);
    fwht_inplace(f);
    CHECK(f == out);
}

TEST_CASE("entries beyond 64 bits stay exact") {
    Spectrum s(3);
    s[0] = Integer("123456789012345678901234567890");
    s[5] = Integer("-98765432109876543210987654321");
    CHECK(inverse_fwht(fwht(s)) == s);
}
