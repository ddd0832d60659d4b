#pragma once

// Big-integer arithmetic used by the counting pipeline.
//
// Every add/sub/mul/exact-division issued through the helpers below bumps a
// thread-local tally, which is how operation counts are measured. Oracles use
// mpz_class directly and are not counted.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace witcount {

using Integer = mpz_class;

namespace arith {

inline thread_local std::uint64_t op_tally = 0;

inline void add(Integer& acc, const Integer& x) {
    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
    ++op_tally;
}

inline void sub(Integer& acc, const Integer& x) {
    mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
    ++op_tally;
}

inline void mul(Integer& acc, const Integer& x) {
    mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
    ++op_tally;
}

inline void mul(Integer& acc, std::uint64_t x) {
    mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(x));
    ++op_tally;
}

// acc += a * b
inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    op_tally += 2;
}

// (a, b) <- (a + b, a - b); tmp is scratch space reused across calls.
inline void butterfly(Integer& a, Integer& b, Integer& tmp) {
    mpz_sub(tmp.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_add(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_swap(b.get_mpz_t(), tmp.get_mpz_t());
    op_tally += 2;
}

// Divides x by 2^bits in place. Throws ExactnessError naming `what` when the
// division leaves a remainder.
void exact_div_pow2(Integer& x, unsigned bits, const char* what);

// Divides x by divisor in place, throwing ExactnessError on a remainder.
void exact_div(Integer& x, const Integer& divisor, const char* what);

Integer factorial(unsigned n);

}  // namespace arith

// Measures the number of counted operations issued on the current thread
// during its lifetime.
class OpCounter {
public:
    OpCounter() : start_(arith::op_tally) {}
    std::uint64_t count() const { return arith::op_tally - start_; }
    void reset() { start_ = arith::op_tally; }

private:
    std::uint64_t start_;
};

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

}  // namespace witcount
