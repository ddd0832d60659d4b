#include "witcount/arith.hpp"

#include "witcount/errors.hpp"

namespace witcount::arith {

void exact_div_pow2(Integer& x, unsigned bits, const char* what) {
    if (!mpz_divisible_2exp_p(x.get_mpz_t(), bits))
        throw ExactnessError(std::string(what) + ": " + x.get_str() + " is not divisible by 2^" +
                             std::to_string(bits));
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    ++op_tally;
}

void exact_div(Integer& x, const Integer& divisor, const char* what) {
    if (divisor == 0 || !mpz_divisible_p(x.get_mpz_t(), divisor.get_mpz_t()))
        throw ExactnessError(std::string(what) + ": " + x.get_str() + " is not divisible by " +
                             divisor.get_str());
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    ++op_tally;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace witcount::arith
