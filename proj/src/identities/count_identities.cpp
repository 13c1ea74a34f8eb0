#include <qpartid/identities.hpp>

#include <stdexcept>
#include <string>
#include <unordered_map>

#include <qpartid/partitions.hpp>
#include <qpartid/weights.hpp>

namespace qpartid
{

namespace
{

BigInt P(long n, long m, long p)
{
    return count_P(n, m, p);
}

BigInt Q(long n, long m, long p)
{
    return count_Q(n, m, p);
}

// sum_{k<=n/step} sum_{l<=m/step} w(l) X(n - step k, m - step l, p) Y(k, l, p)
template <typename X, typename Y, typename W>
BigInt folded_sum(long step, const Params &v, X &&x, Y &&y, W &&weight)
{
    BigInt total = 0;
    for (long k = 0; k <= v.n / step; ++k) {
        for (long l = 0; l <= v.m / step; ++l) {
            BigInt yv = y(k, l, v.p);
            if (yv == 0) {
                continue;
            }
            total += weight(l) * x(v.n - step * k, v.m - step * l, v.p) * yv;
        }
    }
    return total;
}

// sum_{k<=n} sum_{l<=m} w(l) X(n-k, m-l, p) Y(k, l, p)
template <typename X, typename Y, typename W>
BigInt full_convolution(const Params &v, X &&x, Y &&y, W &&weight)
{
    BigInt total = 0;
    for (long k = 0; k <= v.n; ++k) {
        for (long l = 0; l <= v.m; ++l) {
            const int w = weight(l);
            if (w == 0) {
                continue;
            }
            BigInt yv = y(k, l, v.p);
            if (yv == 0) {
                continue;
            }
            total += w * x(v.n - k, v.m - l, v.p) * yv;
        }
    }
    return total;
}

int one(long)
{
    return 1;
}

int alt(long l)
{
    return alt_sign(l);
}

Sides<BigInt> theorem1(const Params &v)
{
    return {P(v.n, v.m, v.p), folded_sum(2, v, Q, P, one)};
}

Sides<BigInt> theorem2(const Params &v)
{
    return {P(v.n + v.m, v.m, v.p + 1), folded_sum(2, v, count_Q_star, P, one)};
}

Sides<BigInt> theorem3(const Params &v)
{
    return {Q(v.n, v.m, v.p), folded_sum(2, v, P, Q, alt)};
}

// Doubled: 2 cos((2l-m) pi/3) = twice_cos(2l - m).
Sides<BigInt> theorem6(const Params &v)
{
    auto w = [m = v.m](long l) { return twice_cos(2 * l - m); };
    return {2 * folded_sum(3, v, Q, P, alt), full_convolution(v, P, P, w)};
}

Sides<BigInt> theorem7(const Params &v)
{
    auto w = [m = v.m](long l) { return twice_cos(2 * l - m); };
    return {2 * folded_sum(3, v, P, Q, alt), full_convolution(v, Q, Q, w)};
}

Sides<BigInt> theorem8(const Params &v)
{
    return {folded_sum(4, v, Q, P, one), folded_sum(2, v, P, P, alt)};
}

Sides<BigInt> theorem9(const Params &v)
{
    return {folded_sum(4, v, P, Q, alt), folded_sum(2, v, Q, Q, one)};
}

Sides<BigInt> theorem_simple(const Params &v)
{
    return {full_convolution(v, P, Q, alt), (v.n == 0 && v.m == 0) ? 1 : 0};
}

// Q*(n,m,p) = sum_k sum_l (-1)^l P(n+m-2(k+l), m-2l, p+1) Q(k,l,p)
Sides<BigInt> qstar_relation(const Params &v)
{
    BigInt rhs = 0;
    for (long k = 0; k <= v.n / 2; ++k) {
        for (long l = 0; l <= v.m / 2; ++l) {
            rhs += alt_sign(l) * P(v.n + v.m - 2 * (k + l), v.m - 2 * l, v.p + 1) * Q(k, l, v.p);
        }
    }
    return {count_Q_star(v.n, v.m, v.p), rhs};
}

// P(n) = sum_{k<=n/2} Q(n-2k) P(k)
Sides<BigInt> pn_from_q(const Params &v)
{
    BigInt rhs = 0;
    for (long k = 0; k <= v.n / 2; ++k) {
        rhs += count_Q_of(v.n - 2 * k) * count_P_of(k);
    }
    return {count_P_of(v.n), rhs};
}

// Q(n) = sum_{k<=n/2} sum_{l<=n/2} (-1)^l P(n-2k) Q(k,l).
Sides<BigInt> qn_double_sum(const Params &v)
{
    BigInt rhs = 0;
    for (long k = 0; k <= v.n / 2; ++k) {
        for (long l = 0; l <= v.n / 2; ++l) {
            rhs += alt_sign(l) * count_P_of(v.n - 2 * k) * count_Q_nm(k, l);
        }
    }
    return {count_Q_of(v.n), rhs};
}

// P_most(n,p) = sum_k P(n,k,p) = P*(n,n,p) = P(2n,n,p+1) = P(n+p,p). Each link
// is compared with the first; the reported rhs is the first link that differs
// (or the last one).
Sides<BigInt> pmost_chain(const Params &v)
{
    BigInt direct = 0;
    for (long k = 0; k <= v.n; ++k) {
        direct += P(v.n, k, v.p);
    }
    const BigInt links[] = {count_P_star(v.n, v.n, v.p), P(2 * v.n, v.n, v.p + 1), count_P_nm(v.n + v.p, v.p),
                            count_P_most(v.n, v.p)};
    for (const auto &link : links) {
        if (link != direct) {
            return {direct, link};
        }
    }
    return {direct, links[2]};
}

Sides<BigInt> pnmp_correspondence(const Params &v)
{
    return {count_P_star(v.n, v.m, v.p), P(v.n + v.m, v.m, v.p + 1)};
}

Sides<BigInt> qnmp_correspondence(const Params &v)
{
    return {Q(v.n, v.m, v.p), P(v.n - v.m * (v.m - 1) / 2, v.m, v.p - v.m + 1)};
}

Sides<BigInt> sine_vanishing(const Params &v, bool use_q)
{
    auto w = [m = v.m](long l) { return twice_sin_over_sqrt3(m - 2 * l); };
    BigInt lhs = use_q ? full_convolution(v, Q, Q, w) : full_convolution(v, P, P, w);
    return {lhs, 0};
}

using SidesFn = Sides<BigInt> (*)(const Params &);

const std::unordered_map<std::string_view, SidesFn> &count_table()
{
    static const std::unordered_map<std::string_view, SidesFn> table{
        {"theorem1", &theorem1},
        {"theorem2", &theorem2},
        {"theorem3", &theorem3},
        {"theorem6", &theorem6},
        {"theorem7", &theorem7},
        {"theorem8", &theorem8},
        {"theorem9", &theorem9},
        {"theorem_simple", &theorem_simple},
        {"qstar_relation", &qstar_relation},
        {"pn_from_q", &pn_from_q},
        {"qn_double_sum", &qn_double_sum},
        {"pmost_chain", &pmost_chain},
        {"pnmp_correspondence", &pnmp_correspondence},
        {"qnmp_correspondence", &qnmp_correspondence},
    };
    return table;
}

void require_nonneg(const Params &v)
{
    if (v.n < 0 || v.m < 0 || v.p < 0) {
        throw std::invalid_argument("n, m and p must be nonnegative");
    }
}

} // namespace

Sides<BigInt> count_identity_sides(std::string_view id, const Params &v)
{
    const auto &table = count_table();
    auto it = table.find(id);
    if (it == table.end()) {
        throw std::invalid_argument("not a count identity: " + std::string(id));
    }
    require_nonneg(v);
    return it->second(v);
}

CaseResult check_count_identity(const IdentityCase &c)
{
    return compare_sides(c, count_identity_sides(c.id, c.values));
}

Sides<BigInt> sine_vanishing_sides(std::string_view id, const Params &v)
{
    require_nonneg(v);
    if (id == "sine_vanishing_6") {
        return sine_vanishing(v, false);
    }
    if (id == "sine_vanishing_7") {
        return sine_vanishing(v, true);
    }
    throw std::invalid_argument("not a sine-vanishing identity: " + std::string(id));
}

CaseResult check_sine_vanishing(const IdentityCase &c)
{
    return compare_sides(c, sine_vanishing_sides(c.id, c.values));
}

} // namespace qpartid
