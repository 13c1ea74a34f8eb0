#include <qpartid/identities.hpp>

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include <qpartid/qbinom.hpp>
#include <qpartid/weights.hpp>

#include "internal.hpp"

namespace qpartid
{

Sides<IntPoly> f_theorem_sides(const FSequence &F, long n, long m, SignOn sign, long base)
{
    if (n < 0 || m < 0) {
        throw std::invalid_argument("f_theorem: n and m must be nonnegative");
    }
    if (F.values.size() < static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("f_theorem: F has " + std::to_string(F.values.size()) + " values, need "
                                    + std::to_string(n + 1));
    }
    IntPoly lhs;
    for (long k = 0; k <= n; ++k) {
        const IntPoly left = shift(bracket(m + 1, k, base), static_cast<std::size_t>(base * binom2(k)));
        for (long l = 0; l <= n - k; ++l) {
            const auto &f = F.values[static_cast<std::size_t>(k + l)];
            if (f.is_zero()) {
                continue;
            }
            const int s = alt_sign(sign == SignOn::k ? k : l);
            lhs += scale(f * left * bracket(m + l, m, base), s);
        }
    }
    return {std::move(lhs), F.values[0]};
}

CaseResult check_F_theorem(const FSequence &F, long n, long m, SignOn sign, long base)
{
    IdentityCase c{sign == SignOn::k ? "f_theorem_k" : "f_theorem_l", {}, false};
    c.values.n = n;
    c.values.m = m;
    return compare_sides(c, f_theorem_sides(F, n, m, sign, base));
}

FSequence f_family(long selector, long n)
{
    const auto len = static_cast<std::size_t>(n < 0 ? 0 : n + 1);
    FSequence F{std::vector<IntPoly>(len)};
    if (len == 0) {
        return F;
    }
    if (selector == 0) {
        F.values[0] = IntPoly{1};
        return F;
    }
    if (selector == 1) {
        for (std::size_t j = 0; j < len; ++j) {
            F.values[j] = IntPoly::monomial(1, j);
        }
        return F;
    }
    // raw engine output keeps the sequence identical across standard libraries
    std::mt19937_64 rng(static_cast<std::uint64_t>(selector));
    for (auto &f : F.values) {
        std::vector<BigInt> coeffs(4);
        for (auto &x : coeffs) {
            x = static_cast<long>(rng() % 7) - 3;
        }
        f = IntPoly(std::move(coeffs));
    }
    return F;
}

FSequence resdbl_f_sequence(int which, const Params &v)
{
    FSequence F;
    for (long j = 0; j <= v.n; ++j) {
        const IntPoly f = (which <= 2) ? bracket(v.p + v.n - j, v.p, v.c) : bracket(v.p, v.n - j, v.c);
        F.values.push_back(shift(f, static_cast<std::size_t>(v.a * binom2(v.n - j))));
    }
    return F;
}

TriangleMap parse_triangle_map(std::string_view name)
{
    if (name == "swap") {
        return TriangleMap::swap_kl;
    }
    if (name == "reflect") {
        return TriangleMap::reflect_l;
    }
    throw std::invalid_argument("unknown triangle index map '" + std::string(name) + "' (expected swap or reflect)");
}

SignedTerm resdbl_summand(int which, const Params &v, long k, long l)
{
    if (which < 1 || which > 4) {
        throw std::invalid_argument("resdbl index must be 1..4");
    }
    const long n = v.n, m = v.m, p = v.p;
    const long rest = n - k - l;
    const IntPoly f = (which <= 2) ? bracket(p + rest, p, v.c) : bracket(p, rest, v.c);
    const long e = v.a * binom2(rest) + v.b * binom2(k);
    SignedTerm t;
    t.sign = alt_sign((which % 2 == 1) ? k : l);
    t.term = shift(f * bracket(m + 1, k, v.b) * bracket(m + l, m, v.b), static_cast<std::size_t>(e));
    return t;
}

SignedTerm mapped_resdbl_summand(int which, const Params &v, const std::vector<TriangleMap> &maps, long k, long l)
{
    for (auto it = maps.rbegin(); it != maps.rend(); ++it) {
        if (*it == TriangleMap::swap_kl) {
            std::swap(k, l);
        } else {
            l = v.n - k - l;
        }
    }
    return resdbl_summand(which, v, k, l);
}

IntPoly resdbl_lhs(int which, const Params &v, const std::vector<TriangleMap> &maps)
{
    IntPoly lhs;
    for (long k = 0; k <= v.n; ++k) {
        for (long l = 0; l <= v.n - k; ++l) {
            SignedTerm t = mapped_resdbl_summand(which, v, maps, k, l);
            lhs += scale(t.term, t.sign);
        }
    }
    return lhs;
}

namespace
{

struct PairingError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

int checked_index(const CorollaryDerivation &d)
{
    const int which = detail::resdbl_index(d.base_id);
    if (which == 0) {
        throw std::invalid_argument("corollary base must be resdbl1..resdbl4, got '" + d.base_id + "'");
    }
    if (!d.bind) {
        throw std::invalid_argument("corollary derivation needs a parameter binding");
    }
    return which;
}

} // namespace

Sides<IntPoly> derived_corollary_sides(const CorollaryDerivation &d, const Params &v)
{
    const int which = checked_index(d);
    const Params base = d.bind(v);
    IntPoly lhs;
    for (long k = 0; k <= base.n; ++k) {
        for (long l = 0; l <= base.n - k; ++l) {
            const SignedTerm first = mapped_resdbl_summand(which, base, d.first, k, l);
            const SignedTerm second = mapped_resdbl_summand(which, base, d.second, k, l);
            if (first.term != second.term || first.sign != alt_sign(k) || second.sign != alt_sign(l)) {
                throw PairingError("summands do not pair at k=" + std::to_string(k) + ", l=" + std::to_string(l));
            }
            const int weight = d.combination == Combination::even ? (first.sign + second.sign) / 2
                                                                  : (first.sign - second.sign) / 2;
            if (weight != 0) {
                lhs += scale(first.term, weight);
            }
        }
    }
    IntPoly rhs = d.combination == Combination::even ? detail::resdbl_rhs(which, base) : IntPoly{};
    return {std::move(lhs), std::move(rhs)};
}

IdentityDescriptor derive_even_sum_corollary(const CorollaryDerivation &d)
{
    checked_index(d);
    IdentityDescriptor desc;
    desc.id = d.id;
    desc.kind = IdentityKind::q_polynomial;
    desc.params = {"n", "m"};
    desc.check = [d](const IdentityCase &c) {
        if (c.values.n < 0 || c.values.m < 0) {
            throw std::invalid_argument(d.id + ": n and m must be nonnegative");
        }
        try {
            return compare_sides(c, derived_corollary_sides(d, c.values));
        } catch (const PairingError &e) {
            CaseResult r{c, false, {}, {}, Mismatch{}};
            r.first_mismatch->note = e.what();
            return r;
        }
    };
    return desc;
}

CorollaryDerivation corollary_2_4_derivation(Combination comb)
{
    CorollaryDerivation d;
    d.id = comb == Combination::even ? "corollary_2_4" : "corollary_2_4_odd";
    d.base_id = "resdbl2";
    d.bind = [](const Params &v) {
        Params b;
        b.n = v.n;
        b.m = v.m;
        b.p = v.m;
        b.a = 0;
        b.b = 1;
        b.c = 1;
        return b;
    };
    d.first = {TriangleMap::swap_kl, TriangleMap::reflect_l};
    d.second = {TriangleMap::swap_kl, TriangleMap::reflect_l, TriangleMap::swap_kl};
    d.combination = comb;
    return d;
}

CorollaryDerivation corollary_3_4_derivation(Combination comb)
{
    CorollaryDerivation d;
    d.id = comb == Combination::even ? "corollary_3_4" : "corollary_3_4_odd";
    d.base_id = "resdbl3";
    d.bind = [](const Params &v) {
        Params b;
        b.n = v.n;
        b.m = v.m;
        b.p = v.m + 1;
        b.a = 1;
        b.b = 1;
        b.c = 1;
        return b;
    };
    d.first = {TriangleMap::reflect_l};
    d.second = {TriangleMap::reflect_l, TriangleMap::swap_kl};
    d.combination = comb;
    return d;
}

} // namespace qpartid
