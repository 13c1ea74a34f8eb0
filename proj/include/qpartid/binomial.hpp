#ifndef QPARTID_BINOMIAL_HPP
#define QPARTID_BINOMIAL_HPP

#include <qpartid/bigpoly.hpp>

namespace qpartid
{

// C(n, k) by the multiplicative formula, each partial product divided exactly.
// Zero when k < 0, n < 0 or k > n.
inline BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return acc;
}

} // namespace qpartid

#endif
