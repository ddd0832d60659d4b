#include "witcount/oracle_check.hpp"

#include <random>
#include <sstream>

#include "witcount/errors.hpp"
#include "witcount/oracle.hpp"
#include "witcount/random_instance.hpp"

namespace witcount {

namespace {

bool enumerable(std::uint64_t m, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (m != 0 && r > oracle::kMaxEnumeratedTuples / m) return false;
        r *= m;
    }
    return r <= oracle::kMaxEnumeratedTuples;
}

bool naive_fits(int d, std::uint64_t m, int k) {
    return (std::uint64_t{1} << d) * static_cast<std::uint64_t>(k) * m <= oracle::kMaxNaiveTableCells;
}

std::string join(const std::vector<Integer>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].get_str();
    return out + "]";
}

std::string dump(const Instance& inst, const WitnessProfile& fast) {
    std::ostringstream os;
    os << "instance:\n" << format_instance(inst);
    os << "fast cand=" << join(fast.cand) << " fail=" << join(fast.fail) << " wit=" << join(fast.wit) << "\n";
    return os.str();
}

std::string invariant_violation(const WitnessProfile& p, std::uint64_t m) {
    const auto len = static_cast<std::size_t>(p.k()) + 1;
    if (p.cand.size() != len || p.fail.size() != len) return "profile arrays differ in length";
    mpz_class fact = 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (i > 0) fact *= static_cast<unsigned long>(i);
        if (p.wit[i] != p.cand[i] - p.fail[i]) return "wit != cand - fail at i=" + std::to_string(i);
        if (p.wit[i] < 0 || p.wit[i] > p.cand[i]) return "wit outside [0, cand] at i=" + std::to_string(i);
        if (p.wit[i] % fact != 0) return std::to_string(i) + "! does not divide wit at i=" + std::to_string(i);
        if (i > m && p.wit[i] != 0) return "nonzero wit for i > m at i=" + std::to_string(i);
    }
    return {};
}

}  // namespace

WitnessProfile default_counter(const Instance& inst) { return count_witnesses(inst); }

CheckResult check_instance(const Instance& inst, const ProfileCounter& fast) {
    validate(inst, kHardMaxDimension);
    const bool brute = enumerable(inst.m(), inst.k);
    const bool naive = naive_fits(inst.d, inst.m(), inst.k);
    if (!brute && !naive) throw GuardError("instance too large for either oracle");

    CheckResult result;
    result.instances = 1;
    WitnessProfile got;
    try {
        got = fast(inst);
    } catch (const ExactnessError& e) {
        result.ok = false;
        result.message = std::string("fast path raised an exactness error: ") + e.what() + "\ninstance:\n" +
                         format_instance(inst);
        return result;
    }

    auto fail = [&](const std::string& why) {
        result.ok = false;
        result.message = why + "\n" + dump(inst, got);
        return result;
    };

    if (got.k() != inst.k) return fail("fast path returned a profile for k=" + std::to_string(got.k()));
    if (auto why = invariant_violation(got, inst.m()); !why.empty()) return fail("invariant violated: " + why);

    if (brute) {
        const auto expected = oracle::brute_force_profile(inst);
        ++result.oracle_runs;
        if (expected != got)
            return fail("mismatch against tuple enumeration: expected cand=" + join(expected.cand) +
                        " fail=" + join(expected.fail) + " wit=" + join(expected.wit));
    }
    if (naive) {
        Instance prefix = inst;
        for (int kp = 0; kp <= inst.k; ++kp) {
            prefix.k = kp;
            const auto expected = oracle::naive_dp_witnesses(prefix);
            ++result.oracle_runs;
            if (expected != got.wit[static_cast<std::size_t>(kp)])
                return fail("mismatch against naive table at k'=" + std::to_string(kp) + ": expected " +
                            expected.get_str());
        }
    }
    result.message = "ok";
    return result;
}

CheckResult check_random(const RandomCheckConfig& cfg, const ProfileCounter& fast) {
    if (cfg.d_max < 1 || cfg.d_max > kDefaultMaxDimension) throw ContractError("dmax must lie in 1..24");
    if (cfg.k_max < 0) throw ContractError("kmax must be non-negative");
    std::mt19937_64 rng(cfg.seed);
    CheckResult total;
    for (std::size_t n = 0; n < cfg.count; ++n) {
        const int d = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(cfg.d_max)));
        const int k = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(cfg.k_max) + 1));
        // Largest m in [0, 2^d] accepted by both guards; both are monotone in m.
        std::uint64_t lo = 0, hi = std::uint64_t{1} << d;
        while (lo < hi) {
            const std::uint64_t mid = hi - (hi - lo) / 2;
            if (enumerable(mid, k) && naive_fits(d, mid, k)) lo = mid;
            else hi = mid - 1;
        }
        const std::uint64_t cap = lo;
        const std::uint64_t m = uniform_below(rng, cap + 1);
        const Instance inst = random_instance(rng, d, m, k);

        auto one = check_instance(inst, fast);
        total.instances += 1;
        total.oracle_runs += one.oracle_runs;
        if (!one.ok) {
            total.ok = false;
            total.message = "instance #" + std::to_string(n) + " (seed " + std::to_string(cfg.seed) + "): " + one.message;
            return total;
        }
    }
    total.message = std::to_string(total.instances) + " instances agree with both oracles";
    return total;
}

}  // namespace witcount
