#ifndef QPARTID_QBINOM_HPP
#define QPARTID_QBINOM_HPP

#include <qpartid/bigpoly.hpp>

namespace qpartid
{

// The q-binomial [top, bottom] in base q^base.
struct GaussKey
{
    long top = 0;
    long bottom = 0;
    long base = 1;
};

// Gaussian polynomial [m + p, m]: generating function of partitions fitting in
// an m x p box, degree m*p. Built by the Pascal-type recurrence
//   [a, b] = [a-1, b-1] + q^b [a-1, b]
// and memoized process-wide; safe to call concurrently.
IntPoly gaussian(long m, long p);

// Zero polynomial when bottom < 0, top < 0 or bottom > top; otherwise
// gaussian(bottom, top - bottom) with q replaced by q^base.
// Throws std::invalid_argument if base < 1.
IntPoly gaussian_general(const GaussKey &key);

inline IntPoly bracket(long top, long bottom, long base = 1)
{
    return gaussian_general({top, bottom, base});
}

// k(k-1)/2; throws std::invalid_argument for negative k.
long binom2(long k);

bool gaussian_symmetry_check(long m, long p);

} // namespace qpartid

#endif
