#pragma once

#include <vector>

#include "witcount/arith.hpp"

namespace witcount {

// binom(s, p) for 0 <= p <= s <= k.
class BinomialTable {
public:
    explicit BinomialTable(int k);

    int k() const { return k_; }
    const Integer& operator()(int s, int p) const { return rows_[static_cast<std::size_t>(s)][static_cast<std::size_t>(p)]; }

private:
    int k_;
    std::vector<std::vector<Integer>> rows_;
};

// Number of ORDERED partitions of an s-element set into `even` classes of
// even size and `odd` classes of odd size, for s <= k. Storage is trimmed to
// even <= k/2 since an even class needs at least two elements; lookups
// outside the stored range return zero.
class OrderedParityTable {
public:
    OrderedParityTable(int k, const BinomialTable& binom);

    int k() const { return k_; }
    const Integer& operator()(int s, int even, int odd) const;

private:
    std::size_t slot(int s, int even, int odd) const;

    int k_;
    int max_even_;
    std::vector<Integer> cells_;
};

struct ParityTables {
    explicit ParityTables(int k);

    int k;
    BinomialTable binom;
    OrderedParityTable ordered;
    std::vector<Integer> factorials;  // 0! .. k!
};

inline ParityTables build_parity_tables(int k) { return ParityTables(k); }

// Unordered partitions of [1, kp] with `even` even-size and `odd` odd-size
// classes: the ordered count divided exactly by (even + odd)!.
Integer unordered_parity_count(const ParityTables& tables, int even, int odd, int kp);

}  // namespace witcount
