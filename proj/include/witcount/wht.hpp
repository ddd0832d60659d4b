#pragma once

#include <cstddef>
#include <vector>

#include "witcount/arith.hpp"
#include "witcount/parallel.hpp"

namespace witcount {

// A function F_2^d -> Z as its table of 2^d exact integers.
class Spectrum {
public:
    Spectrum() = default;
    // Zero table of length 2^d.
    explicit Spectrum(int d);
    // Takes ownership of values; throws ContractError unless the length is a power of two.
    explicit Spectrum(std::vector<Integer> values);

    template <typename T>
    static Spectrum from(const std::vector<T>& values) {
        std::vector<Integer> big;
        big.reserve(values.size());
        for (const auto& v : values) big.emplace_back(v);
        return Spectrum(std::move(big));
    }

    int d() const { return d_; }
    std::size_t size() const { return values_.size(); }
    Integer& operator[](std::size_t i) { return values_[i]; }
    const Integer& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<Integer>& values() const { return values_; }
    std::vector<Integer>& values() { return values_; }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    int d_ = 0;
    std::vector<Integer> values_{Integer(0)};
};

// In-place fast Walsh-Hadamard transform: multiplies by the Hadamard matrix
// H_d using d butterfly levels, 2^d * d additions/subtractions in total.
void fwht_inplace(Spectrum& s, const ExecOptions& exec = {});
Spectrum fwht(Spectrum s, const ExecOptions& exec = {});

// fwht followed by an exact division of every entry by 2^d. Throws
// ExactnessError if some entry is not divisible.
void inverse_fwht_inplace(Spectrum& s, const ExecOptions& exec = {});
Spectrum inverse_fwht(Spectrum s, const ExecOptions& exec = {});

// (f * g)(x) = sum over v1 + v2 = x of f(v1) g(v2), via the transform.
Spectrum xor_convolve(const Spectrum& f, const Spectrum& g, const ExecOptions& exec = {});

}  // namespace witcount
