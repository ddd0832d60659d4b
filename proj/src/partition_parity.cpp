#include "witcount/partition_parity.hpp"

#include <string>

#include "witcount/errors.hpp"

namespace witcount {

namespace {
const Integer kZero(0);
}

BinomialTable::BinomialTable(int k) : k_(k) {
    if (k < 0) throw ContractError("k must be non-negative");
    rows_.resize(static_cast<std::size_t>(k) + 1);
    for (int s = 0; s <= k; ++s) {
        auto& row = rows_[static_cast<std::size_t>(s)];
        row.assign(static_cast<std::size_t>(s) + 1, Integer(1));
        for (int p = 1; p < s; ++p) {
            row[static_cast<std::size_t>(p)] = rows_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(p - 1)];
            arith::add(row[static_cast<std::size_t>(p)], rows_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(p)]);
        }
    }
}

OrderedParityTable::OrderedParityTable(int k, const BinomialTable& binom) : k_(k), max_even_(k / 2) {
    if (binom.k() < k) throw ContractError("binomial table too small");
    const auto n = static_cast<std::size_t>(k + 1);
    cells_.assign(n * static_cast<std::size_t>(max_even_ + 1) * n, Integer(0));
    cells_[slot(0, 0, 0)] = 1;

    Integer term;
    for (int s = 1; s <= k; ++s) {
        for (int even = 0; 2 * even <= s; ++even) {
            for (int odd = (s - 2 * even) % 2; 2 * even + odd <= s; odd += 2) {
                Integer& cell = cells_[slot(s, even, odd)];
                // The first class has p elements; the rest is an ordered partition of s - p.
                for (int p = 1; p <= s; ++p) {
                    const bool p_even = p % 2 == 0;
                    if (p_even ? even == 0 : odd == 0) continue;
                    const Integer& rest = (*this)(s - p, p_even ? even - 1 : even, p_even ? odd : odd - 1);
                    if (rest == 0) continue;
                    arith::add_product(cell, binom(s, p), rest);
                }
            }
        }
    }
}

std::size_t OrderedParityTable::slot(int s, int even, int odd) const {
    const auto n = static_cast<std::size_t>(k_ + 1);
    return (static_cast<std::size_t>(s) * static_cast<std::size_t>(max_even_ + 1) + static_cast<std::size_t>(even)) * n +
           static_cast<std::size_t>(odd);
}

const Integer& OrderedParityTable::operator()(int s, int even, int odd) const {
    if (s < 0 || s > k_ || even < 0 || odd < 0 || even > max_even_ || odd > k_) return kZero;
    return cells_[slot(s, even, odd)];
}

ParityTables::ParityTables(int k_) : k(k_), binom(k_), ordered(k_, binom) {
    factorials.reserve(static_cast<std::size_t>(k_) + 1);
    factorials.emplace_back(1);
    for (int i = 1; i <= k_; ++i) {
        Integer next = factorials.back();
        arith::mul(next, static_cast<std::uint64_t>(i));
        factorials.push_back(std::move(next));
    }
}

Integer unordered_parity_count(const ParityTables& tables, int even, int odd, int kp) {
    if (kp < 0 || kp > tables.k)
        throw ContractError("kp=" + std::to_string(kp) + " outside the table range 0.." + std::to_string(tables.k));
    if (even < 0 || odd < 0 || even + odd > kp) return 0;
    Integer count = tables.ordered(kp, even, odd);
    if (count == 0) return count;
    arith::exact_div(count, tables.factorials[static_cast<std::size_t>(even + odd)], "unordered partition count");
    return count;
}

}  // namespace witcount
