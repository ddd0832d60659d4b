#include "witcount/candidates.hpp"

#include "witcount/errors.hpp"

namespace witcount {

namespace {

Spectrum transformed_indicator(const CharTable& chi, const ExecOptions& exec) {
    Spectrum s(chi.d);
    for (std::size_t x = 0; x < chi.size(); ++x)
        if (chi.values[x]) s[x] = 1;
    fwht_inplace(s, exec);
    return s;
}

}  // namespace

CandidateProfile count_candidates_profile(const CharTable& chi, GF2Vector target, int k,
                                          const ExecOptions& exec) {
    if (k < 0) throw ContractError("k must be non-negative");
    if (target.index >= chi.size()) throw ContractError("target index out of range");

    CandidateProfile profile;
    profile.counts.assign(static_cast<std::size_t>(k) + 1, Integer(0));
    profile.counts[0] = target.index == 0 ? 1 : 0;
    if (k == 0) return profile;

    const Spectrum chi_hat = transformed_indicator(chi, exec);
    Spectrum power = chi_hat;
    const std::size_t n = chi.size();
    const unsigned threads = exec.threads == 0 ? 1 : exec.threads;

    for (int i = 1; i <= k; ++i) {
        if (i > 1) {
            detail::parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t x = lo; x < hi; ++x) arith::mul(power[x], chi_hat[x]);
            });
        }
        // Per-chunk partial sums, combined in chunk order.
        std::vector<Integer> partial(threads, Integer(0));
        detail::parallel_for(threads, threads, [&](std::size_t c_lo, std::size_t c_hi) {
            for (std::size_t c = c_lo; c < c_hi; ++c) {
                const std::size_t lo = n * c / threads, hi = n * (c + 1) / threads;
                Integer& acc = partial[c];
                for (std::size_t x = lo; x < hi; ++x) {
                    if (dot(target, GF2Vector{x})) arith::sub(acc, power[x]);
                    else arith::add(acc, power[x]);
                }
            }
        });
        Integer total = std::move(partial[0]);
        for (std::size_t c = 1; c < partial.size(); ++c) arith::add(total, partial[c]);
        arith::exact_div_pow2(total, static_cast<unsigned>(chi.d), "candidate count");
        profile.counts[static_cast<std::size_t>(i)] = std::move(total);
    }
    return profile;
}

std::vector<Spectrum> candidate_tables_full(const CharTable& chi, int k, const ExecOptions& exec) {
    if (k < 0) throw ContractError("k must be non-negative");
    std::vector<Spectrum> rows;
    rows.reserve(static_cast<std::size_t>(k) + 1);
    Spectrum delta(chi.d);
    delta[0] = 1;
    rows.push_back(std::move(delta));
    if (k == 0) return rows;

    const Spectrum chi_hat = transformed_indicator(chi, exec);
    Spectrum power = chi_hat;
    for (int i = 1; i <= k; ++i) {
        if (i > 1)
            for (std::size_t x = 0; x < power.size(); ++x) arith::mul(power[x], chi_hat[x]);
        rows.push_back(inverse_fwht(power, exec));
    }
    return rows;
}

}  // namespace witcount
