#include "witcount/wht.hpp"

#include <bit>
#include <string>

#include "witcount/errors.hpp"

namespace witcount {

Spectrum::Spectrum(int d) : d_(d), values_(std::size_t{1} << d) {}

Spectrum::Spectrum(std::vector<Integer> values) {
    if (values.empty() || !std::has_single_bit(values.size()))
        throw ContractError("spectrum length " + std::to_string(values.size()) +
                            " is not a power of two");
    d_ = std::countr_zero(values.size());
    values_ = std::move(values);
}

void fwht_inplace(Spectrum& s, const ExecOptions& exec) {
    const std::size_t pairs = s.size() / 2;
    auto& v = s.values();
    for (int level = 0; level < s.d(); ++level) {
        const std::size_t half = std::size_t{1} << level;
        // Pair j is (i, i + half) where i has a zero at bit `level`.
        detail::parallel_for(pairs, exec.threads, [&](std::size_t lo, std::size_t hi) {
            Integer tmp;
            for (std::size_t j = lo; j < hi; ++j) {
                const std::size_t i = ((j >> level) << (level + 1)) | (j & (half - 1));
                arith::butterfly(v[i], v[i + half], tmp);
            }
        });
    }
}

Spectrum fwht(Spectrum s, const ExecOptions& exec) {
    fwht_inplace(s, exec);
    return s;
}

void inverse_fwht_inplace(Spectrum& s, const ExecOptions& exec) {
    fwht_inplace(s, exec);
    const auto bits = static_cast<unsigned>(s.d());
    auto& v = s.values();
    detail::parallel_for(v.size(), exec.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x) arith::exact_div_pow2(v[x], bits, "inverse transform");
    });
}

Spectrum inverse_fwht(Spectrum s, const ExecOptions& exec) {
    inverse_fwht_inplace(s, exec);
    return s;
}

Spectrum xor_convolve(const Spectrum& f, const Spectrum& g, const ExecOptions& exec) {
    if (f.size() != g.size())
        throw ContractError("convolution operands differ in length: " + std::to_string(f.size()) +
                            " vs " + std::to_string(g.size()));
    Spectrum fh = fwht(f, exec);
    const Spectrum gh = fwht(g, exec);
    auto& out = fh.values();
    detail::parallel_for(out.size(), exec.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x) arith::mul(out[x], gh[x]);
    });
    inverse_fwht_inplace(fh, exec);
    return fh;
}

}  // namespace witcount
