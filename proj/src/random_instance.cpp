#include "witcount/random_instance.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "witcount/errors.hpp"

namespace witcount {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw ContractError("uniform_below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

std::vector<GF2Vector> sample_distinct_vectors(std::mt19937_64& rng, int d, std::uint64_t m) {
    const std::uint64_t n = std::uint64_t{1} << d;
    if (m > n) throw ContractError("cannot draw " + std::to_string(m) + " distinct vectors from 2^" + std::to_string(d));
    std::vector<std::uint64_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::uint64_t{0});
    std::vector<GF2Vector> out;
    out.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t j = i + uniform_below(rng, n - i);
        std::swap(pool[i], pool[j]);
        out.push_back(GF2Vector{pool[i]});
    }
    return out;
}

Instance random_instance(std::mt19937_64& rng, int d, std::uint64_t m, int k) {
    Instance inst;
    inst.d = d;
    inst.k = k;
    inst.vectors = sample_distinct_vectors(rng, d, m);
    inst.target = GF2Vector{uniform_below(rng, std::uint64_t{1} << d)};
    return inst;
}

}  // namespace witcount
