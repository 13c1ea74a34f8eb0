#include <qpartid/identities.hpp>

#include <array>
#include <stdexcept>
#include <string>

#include <qpartid/binomial.hpp>
#include <qpartid/weights.hpp>

namespace qpartid
{

namespace
{

BigInt C(long n, long k)
{
    return binomial(n, k);
}

template <typename F>
BigInt sum(long lo, long hi, F &&f)
{
    BigInt total = 0;
    for (long k = lo; k <= hi; ++k) {
        total += f(k);
    }
    return total;
}

// sum_k sum_{l<=n-k}
template <typename F>
BigInt triangle(long n, F &&f)
{
    BigInt total = 0;
    for (long k = 0; k <= n; ++k) {
        for (long l = 0; l <= n - k; ++l) {
            total += f(k, l);
        }
    }
    return total;
}

using Fn = Sides<BigInt> (*)(long n, long m, long p);

// sum (-1)^k C(m+1, 3k+r) C(m+n-k, m), doubled, against the cosine-weighted side
template <long R>
Sides<BigInt> third_lower(long n, long m, long)
{
    return {2 * sum(0, n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 1, 3 * k + R) * C(m + n - k, m); }),
            sum(0, 3 * n + R, [&](long k) -> BigInt { return twice_cos(2 * k - R) * C(m + 3 * n - k + R, m) * C(m + k, m); })};
}

template <long R>
Sides<BigInt> third_upper(long n, long m, long)
{
    return {2 * sum(0, n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 3 * k + R, m) * C(m + 1, n - k); }),
            sum(0, 3 * n + R, [&](long k) -> BigInt { return twice_cos(2 * k - R) * C(m + 1, 3 * n - k + R) * C(m + 1, k); })};
}

const std::array<Fn, combinatorial_count> &table()
{
    static const std::array<Fn, combinatorial_count> fns{
        // comb01
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return alt_sign(k) * C(m + k, m) * C(m + 1, n - k); }), n == 0 ? 1 : 0};
        },
        // comb02
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return C(m + 1, 2 * k) * C(m + n - k, m); }), C(m + 2 * n, m)};
        },
        // comb03
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return C(m + 1, 2 * k + 1) * C(m + n - k, m); }), C(m + 2 * n + 1, m)};
        },
        // comb04
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 2 * k, m) * C(m + 1, n - k); }),
                    alt_sign(n) * C(m + 1, 2 * n)};
        },
        // comb05
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 2 * k + 1, m) * C(m + 1, n - k); }),
                    alt_sign(n) * C(m + 1, 2 * n + 1)};
        },
        // comb06..comb08
        &third_lower<0>,
        &third_lower<1>,
        &third_lower<2>,
        // comb09..comb11
        &third_upper<0>,
        &third_upper<1>,
        &third_upper<2>,
        // comb12
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return C(m + 1, 4 * k) * C(m + n - k, m); }),
                    sum(0, 2 * n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 2 * k, m) * C(m + 2 * n - k, m); })};
        },
        // comb13
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return C(m + 1, 4 * k + 1) * C(m + n - k, m); }),
                    sum(0, 2 * n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 2 * k + 1, m) * C(m + 2 * n - k, m); })};
        },
        // comb14
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return C(m + 1, 4 * k + 2) * C(m + n - k, m); }),
                    sum(0, 2 * n + 1,
                        [&](long k) -> BigInt { return alt_sign(k + 1) * C(m + 2 * k, m) * C(m + 2 * n - k + 1, m); })};
        },
        // comb15
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return C(m + 1, 4 * k + 3) * C(m + n - k, m); }),
                    sum(0, 2 * n + 1,
                        [&](long k) -> BigInt { return alt_sign(k + 1) * C(m + 2 * k + 1, m) * C(m + 2 * n - k + 1, m); })};
        },
        // comb16
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 4 * k, m) * C(m + 1, n - k); }),
                    alt_sign(n) * sum(0, 2 * n, [&](long k) -> BigInt { return C(m + 1, 2 * k) * C(m + 1, 2 * n - k); })};
        },
        // comb17
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 4 * k + 1, m) * C(m + 1, n - k); }),
                    alt_sign(n) * sum(0, 2 * n, [&](long k) -> BigInt { return C(m + 1, 2 * k + 1) * C(m + 1, 2 * n - k); })};
        },
        // comb18
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 4 * k + 2, m) * C(m + 1, n - k); }),
                    alt_sign(n)
                        * sum(0, 2 * n + 1, [&](long k) -> BigInt { return C(m + 1, 2 * k) * C(m + 1, 2 * n - k + 1); })};
        },
        // comb19
        [](long n, long m, long) -> Sides<BigInt> {
            return {sum(0, n, [&](long k) -> BigInt { return alt_sign(k) * C(m + 4 * k + 3, m) * C(m + 1, n - k); }),
                    alt_sign(n)
                        * sum(0, 2 * n + 1, [&](long k) -> BigInt { return C(m + 1, 2 * k + 1) * C(m + 1, 2 * n - k + 1); })};
        },
        // comb20..comb23: the q = 1 shadows of resdbl1..resdbl4
        [](long n, long m, long p) -> Sides<BigInt> {
            return {triangle(n, [&](long k, long l) -> BigInt { return alt_sign(k) * C(p + n - k - l, p) * C(m + 1, k) * C(m + l, m); }),
                    C(p + n, p)};
        },
        [](long n, long m, long p) -> Sides<BigInt> {
            return {triangle(n, [&](long k, long l) -> BigInt { return alt_sign(l) * C(p + n - k - l, p) * C(m + 1, k) * C(m + l, m); }),
                    C(p + n, p)};
        },
        [](long n, long m, long p) -> Sides<BigInt> {
            return {triangle(n, [&](long k, long l) -> BigInt { return alt_sign(k) * C(p, n - k - l) * C(m + 1, k) * C(m + l, m); }),
                    C(p, n)};
        },
        [](long n, long m, long p) -> Sides<BigInt> {
            return {triangle(n, [&](long k, long l) -> BigInt { return alt_sign(l) * C(p, n - k - l) * C(m + 1, k) * C(m + l, m); }),
                    C(p, n)};
        },
    };
    return fns;
}

// "comb07" -> 6; -1 if malformed or out of range
int comb_index(std::string_view id)
{
    if (id.size() != 6 || !id.starts_with("comb") || id[4] < '0' || id[4] > '9' || id[5] < '0' || id[5] > '9') {
        return -1;
    }
    const int k = (id[4] - '0') * 10 + (id[5] - '0');
    return (k >= 1 && k <= combinatorial_count) ? k - 1 : -1;
}

} // namespace

Sides<BigInt> combinatorial_sides(std::string_view id, const Params &v)
{
    const int idx = comb_index(id);
    if (idx < 0) {
        throw std::invalid_argument("not a combinatorial identity: " + std::string(id));
    }
    if (v.n < 0 || v.m < 0 || v.p < 0) {
        throw std::invalid_argument("n, m and p must be nonnegative");
    }
    return table()[static_cast<std::size_t>(idx)](v.n, v.m, v.p);
}

CaseResult check_combinatorial(const IdentityCase &c)
{
    return compare_sides(c, combinatorial_sides(c.id, c.values));
}

} // namespace qpartid
