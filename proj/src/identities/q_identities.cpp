#include <qpartid/identities.hpp>

#include <stdexcept>
#include <string>
#include <unordered_map>

#include <qpartid/qbinom.hpp>
#include <qpartid/weights.hpp>

#include "internal.hpp"

namespace qpartid
{

namespace
{

std::size_t qexp(long e)
{
    if (e < 0) {
        throw std::logic_error("negative q exponent " + std::to_string(e));
    }
    return static_cast<std::size_t>(e);
}

// sign * q^e * f * g
IntPoly term(long sign, long e, const IntPoly &f, const IntPoly &g)
{
    return scale(shift(f * g, qexp(e)), sign);
}

void require_nm(const Params &v)
{
    if (v.n < 0 || v.m < 0) {
        throw std::invalid_argument("n and m must be nonnegative");
    }
}

Sides<IntPoly> delta_sides(const Params &v)
{
    const long n = v.n, m = v.m;
    IntPoly lhs;
    for (long k = 0; k <= n; ++k) {
        lhs += term(alt_sign(k), binom2(k), bracket(m + n - k, m), bracket(m + 1, k));
    }
    return {lhs, n == 0 ? IntPoly{1} : IntPoly{}};
}

Sides<IntPoly> result1_sides(const Params &v)
{
    const long n = v.n, m = v.m;
    IntPoly lhs;
    for (long k = 0; k <= n / 2; ++k) {
        lhs += term(1, binom2(n - 2 * k), bracket(m + 1, n - 2 * k), bracket(m + k, m, 2));
    }
    return {lhs, bracket(m + n, m)};
}

Sides<IntPoly> result2_sides(const Params &v)
{
    const long n = v.n, m = v.m;
    IntPoly lhs;
    for (long k = 0; k <= n / 2; ++k) {
        lhs += term(alt_sign(k), 2 * binom2(k), bracket(m + n - 2 * k, m), bracket(m + 1, k, 2));
    }
    return {lhs, shift(bracket(m + 1, n), qexp(binom2(n)))};
}

// Doubled: 2 cos((2k-n) pi/3) is the integer twice_cos(2k-n).
Sides<IntPoly> result3_sides(const Params &v)
{
    const long n = v.n, m = v.m;
    IntPoly lhs;
    for (long k = 0; k <= n / 3; ++k) {
        lhs += term(2 * alt_sign(k), binom2(n - 3 * k), bracket(m + 1, n - 3 * k), bracket(m + k, m, 3));
    }
    IntPoly rhs;
    for (long k = 0; k <= n; ++k) {
        rhs += term(twice_cos(2 * k - n), 0, bracket(m + n - k, m), bracket(m + k, m));
    }
    return {lhs, rhs};
}

Sides<IntPoly> result4_sides(const Params &v)
{
    const long n = v.n, m = v.m;
    IntPoly lhs;
    for (long k = 0; k <= n / 3; ++k) {
        lhs += term(2 * alt_sign(k), 3 * binom2(k), bracket(m + n - 3 * k, m), bracket(m + 1, k, 3));
    }
    IntPoly rhs;
    for (long k = 0; k <= n; ++k) {
        rhs += term(twice_cos(2 * k - n), binom2(n - k) + binom2(k), bracket(m + 1, n - k), bracket(m + 1, k));
    }
    return {lhs, rhs};
}

Sides<IntPoly> result5_sides(const Params &v)
{
    const long n = v.n, m = v.m;
    IntPoly lhs;
    for (long k = 0; k <= n / 4; ++k) {
        lhs += term(1, binom2(n - 4 * k), bracket(m + 1, n - 4 * k), bracket(m + k, m, 4));
    }
    IntPoly rhs;
    for (long k = 0; k <= n / 2; ++k) {
        rhs += term(alt_sign(k), 0, bracket(m + n - 2 * k, m), bracket(m + k, m, 2));
    }
    return {lhs, rhs};
}

Sides<IntPoly> result6_sides(const Params &v)
{
    const long n = v.n, m = v.m;
    IntPoly lhs;
    for (long k = 0; k <= n / 4; ++k) {
        lhs += term(alt_sign(k), 4 * binom2(k), bracket(m + n - 4 * k, m), bracket(m + 1, k, 4));
    }
    IntPoly rhs;
    for (long k = 0; k <= n / 2; ++k) {
        rhs += term(1, binom2(n - 2 * k) + 2 * binom2(k), bracket(m + 1, n - 2 * k), bracket(m + 1, k, 2));
    }
    return {lhs, rhs};
}

template <int Which>
Sides<IntPoly> resdbl_sides(const Params &v)
{
    return {resdbl_lhs(Which, v), detail::resdbl_rhs(Which, v)};
}

// sum over k + l <= n with k + l of the given parity of (-1)^k U(k, l)
template <typename Summand>
IntPoly parity_triangle(long n, long parity, Summand &&unsigned_term)
{
    IntPoly out;
    for (long k = 0; k <= n; ++k) {
        for (long l = 0; l <= n - k; ++l) {
            if ((k + l) % 2 == parity) {
                out += scale(unsigned_term(k, l), alt_sign(k));
            }
        }
    }
    return out;
}

// sum_{k+l even} (-1)^k q^{C(n-k-l,2)} [m+k,m][m+l,m][m+1,n-k-l] = [m+n,m]
template <long Parity>
Sides<IntPoly> corollary_2_4_sides(const Params &v)
{
    const long n = v.n, m = v.m;
    IntPoly lhs = parity_triangle(n, Parity, [&](long k, long l) {
        return shift(bracket(m + k, m) * bracket(m + l, m) * bracket(m + 1, n - k - l), qexp(binom2(n - k - l)));
    });
    return {lhs, Parity == 0 ? bracket(m + n, m) : IntPoly{}};
}

// sum_{k+l even} (-1)^k q^{C(k,2)+C(l,2)} [m+1,k][m+1,l][m+n-k-l,m] = q^{C(n,2)} [m+1,n]
template <long Parity>
Sides<IntPoly> corollary_3_4_sides(const Params &v)
{
    const long n = v.n, m = v.m;
    IntPoly lhs = parity_triangle(n, Parity, [&](long k, long l) {
        return shift(bracket(m + 1, k) * bracket(m + 1, l) * bracket(m + n - k - l, m), qexp(binom2(k) + binom2(l)));
    });
    return {lhs, Parity == 0 ? shift(bracket(m + 1, n), qexp(binom2(n))) : IntPoly{}};
}

using SidesFn = Sides<IntPoly> (*)(const Params &);

const std::unordered_map<std::string_view, SidesFn> &q_table()
{
    static const std::unordered_map<std::string_view, SidesFn> table{
        {"delta", &delta_sides},
        {"result1", &result1_sides},
        {"result2", &result2_sides},
        {"result3", &result3_sides},
        {"result4", &result4_sides},
        {"result5", &result5_sides},
        {"result6", &result6_sides},
        {"resdbl1", &resdbl_sides<1>},
        {"resdbl2", &resdbl_sides<2>},
        {"resdbl3", &resdbl_sides<3>},
        {"resdbl4", &resdbl_sides<4>},
        {"corollary_2_4", &corollary_2_4_sides<0>},
        {"corollary_2_4_odd", &corollary_2_4_sides<1>},
        {"corollary_3_4", &corollary_3_4_sides<0>},
        {"corollary_3_4_odd", &corollary_3_4_sides<1>},
    };
    return table;
}

} // namespace

IntPoly detail::resdbl_rhs(int which, const Params &v)
{
    const IntPoly f = (which <= 2) ? bracket(v.p + v.n, v.p, v.c) : bracket(v.p, v.n, v.c);
    return shift(f, qexp(v.a * binom2(v.n)));
}

int detail::resdbl_index(std::string_view id)
{
    if (id.size() == 7 && id.starts_with("resdbl") && id[6] >= '1' && id[6] <= '4') {
        return id[6] - '0';
    }
    return 0;
}

Sides<IntPoly> q_identity_sides(std::string_view id, const Params &v)
{
    const auto &table = q_table();
    auto it = table.find(id);
    if (it == table.end()) {
        throw std::invalid_argument("not a q-polynomial identity: " + std::string(id));
    }
    require_nm(v);
    if (id.starts_with("resdbl") && (v.p < 0 || v.a < 0 || v.b < 1 || v.c < 1)) {
        throw std::invalid_argument("resdbl identities need p, a >= 0 and b, c >= 1");
    }
    return it->second(v);
}

CaseResult check_q_identity(const IdentityCase &c)
{
    return compare_sides(c, q_identity_sides(c.id, c.values));
}

} // namespace qpartid
