#include "witcount/oracle.hpp"

#include <string>

#include "witcount/errors.hpp"

namespace witcount::oracle {

namespace {

// m^k, saturating just above the limit.
std::uint64_t capped_power(std::uint64_t m, int k, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (m != 0 && r > limit / m) return limit + 1;
        r *= m;
    }
    return r;
}

}  // namespace

WitnessProfile brute_force_profile(const Instance& inst) {
    validate(inst, kHardMaxDimension);
    const std::size_t m = inst.m();
    const int k = inst.k;
    if (capped_power(m, k, kMaxEnumeratedTuples) > kMaxEnumeratedTuples)
        throw GuardError("brute-force enumeration refused: m^k = " + std::to_string(m) + "^" +
                         std::to_string(k) + " exceeds " + std::to_string(kMaxEnumeratedTuples));

    const auto len = static_cast<std::size_t>(k) + 1;
    std::vector<std::uint64_t> cand(len, 0), wit(len, 0);

    // Odometer over index vectors of length `depth`; each prefix is itself an
    // i-tuple for i = depth, so one traversal covers every length.
    std::vector<std::size_t> digits(static_cast<std::size_t>(k), 0);
    std::vector<std::uint64_t> prefix_sum(len, 0);
    std::vector<int> uses(m, 0);
    std::vector<int> repeats(len, 0);  // repeated entries within the prefix
    std::size_t depth = 0;

    auto record = [&] {
        if (prefix_sum[depth] == inst.target.index) {
            ++cand[depth];
            if (repeats[depth] == 0) ++wit[depth];
        }
    };
    record();

    bool running = m > 0 && k > 0;
    while (running) {
        // Place digits[depth] at position depth.
        const std::size_t idx = digits[depth];
        prefix_sum[depth + 1] = prefix_sum[depth] ^ inst.vectors[idx].index;
        repeats[depth + 1] = repeats[depth] + (uses[idx] > 0 ? 1 : 0);
        ++uses[idx];
        ++depth;
        record();

        if (depth < static_cast<std::size_t>(k)) {
            digits[depth] = 0;
            continue;
        }
        // Advance the odometer, popping positions whose digit wrapped.
        for (;;) {
            --depth;
            --uses[digits[depth]];
            if (++digits[depth] < m) break;
            if (depth == 0) {
                running = false;
                break;
            }
        }
    }

    WitnessProfile out;
    for (std::size_t i = 0; i < len; ++i) {
        out.cand.emplace_back(static_cast<unsigned long>(cand[i]));
        out.wit.emplace_back(static_cast<unsigned long>(wit[i]));
        out.fail.emplace_back(static_cast<unsigned long>(cand[i] - wit[i]));
    }
    return out;
}

Integer naive_dp_witnesses(const Instance& inst) {
    validate(inst, kHardMaxDimension);
    const int k = inst.k;
    if (k == 0) return Integer(inst.target.index == 0 ? 1 : 0);
    const std::size_t m = inst.m();
    if (static_cast<std::size_t>(k) > m) return Integer(0);

    const std::size_t n = std::size_t{1} << inst.d;
    const auto cells = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(k) * m;
    if (cells > kMaxNaiveTableCells)
        throw GuardError("naive table refused: 2^d * k * m = " + std::to_string(cells) + " cells exceeds " +
                         std::to_string(kMaxNaiveTableCells));

    // layer[v * m + w] for the current length i.
    std::vector<mpz_class> layer(n * m), next(n * m);
    for (std::size_t w = 0; w < m; ++w) layer[inst.vectors[w].index * m + w] = 1;

    for (int i = 2; i <= k; ++i) {
        for (auto& c : next) c = 0;
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t w = 0; w < m; ++w) {
                // Drop the last vector w; the previous last w' comes earlier in the order.
                const std::size_t rest = v ^ inst.vectors[w].index;
                mpz_class sum = 0;
                for (std::size_t wp = 0; wp < w; ++wp) sum += layer[rest * m + wp];
                next[v * m + w] = sum;
            }
        }
        layer.swap(next);
    }

    mpz_class total = 0;
    for (std::size_t w = 0; w < m; ++w) total += layer[inst.target.index * m + w];
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    return total * fact;
}

std::vector<Partition> enumerate_partitions(int kp) {
    if (kp < 0) throw ContractError("kp must be non-negative");
    if (kp > kMaxPartitionSize)
        throw GuardError("partition enumeration refused: kp=" + std::to_string(kp) + " exceeds " +
                         std::to_string(kMaxPartitionSize));
    std::vector<Partition> out;
    // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i-1]).
    std::vector<int> label(static_cast<std::size_t>(kp), 0);
    auto emit = [&] {
        Partition p;
        for (int i = 0; i < kp; ++i) {
            const auto c = static_cast<std::size_t>(label[static_cast<std::size_t>(i)]);
            if (c == p.size()) p.emplace_back();
            p[c].push_back(i + 1);
        }
        out.push_back(std::move(p));
    };
    if (kp == 0) {
        out.emplace_back();
        return out;
    }
    for (;;) {
        emit();
        // Increment the rightmost position that can grow.
        int i = kp - 1;
        for (; i > 0; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, label[static_cast<std::size_t>(j)]);
            if (label[static_cast<std::size_t>(i)] <= prefix_max) break;
        }
        if (i == 0) break;
        ++label[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < kp; ++j) label[static_cast<std::size_t>(j)] = 0;
    }
    return out;
}

Spectrum brute_force_convolution(const Spectrum& f, const Spectrum& g) {
    if (f.size() != g.size()) throw ContractError("convolution operands differ in length");
    if (f.d() > kMaxConvolutionDimension)
        throw GuardError("brute-force convolution refused: d=" + std::to_string(f.d()));
    Spectrum out(f.d());
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) out[a ^ b] += f[a] * g[b];
    return out;
}

}  // namespace witcount::oracle
