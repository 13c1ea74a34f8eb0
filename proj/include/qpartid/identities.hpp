#ifndef QPARTID_IDENTITIES_HPP
#define QPARTID_IDENTITIES_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qpartid/bigpoly.hpp>

namespace qpartid
{

enum class IdentityKind
{
    q_polynomial,
    count_integer,
    combinatorial_q1,
};

std::string_view to_string(IdentityKind kind);

// Bound values for an identity instance. Only the names listed in the
// descriptor's params are meaningful for a given identity.
struct Params
{
    long n = 0;
    long m = 0;
    long p = 0;
    long a = 0;
    long b = 1;
    long c = 1;

    // name is one of "n", "m", "p", "a", "b", "c"; throws std::invalid_argument otherwise.
    [[nodiscard]] long get(std::string_view name) const;
    void set(std::string_view name, long value);
};

struct IdentityCase
{
    std::string id;
    Params values;
    // Test hook: the check perturbs its right-hand side so the case fails.
    bool inject_failure = false;
};

struct Mismatch
{
    std::optional<std::size_t> q_exponent;
    std::optional<std::size_t> z_exponent;
    BigInt lhs;
    BigInt rhs;
    std::string note;
};

struct CaseResult
{
    IdentityCase identity_case;
    bool pass = false;
    std::string lhs_hash;
    std::string rhs_hash;
    std::optional<Mismatch> first_mismatch;
};

template <typename T>
struct Sides
{
    T lhs;
    T rhs;
};

// SHA-256 hex digests of the canonical decimal rendering.
std::string digest(const IntPoly &p);
std::string digest(const BigInt &x);
std::string digest(std::string_view canonical);

// Builds the verdict; equality is decided on the full values, never the hashes.
CaseResult compare_sides(const IdentityCase &c, Sides<IntPoly> sides);
CaseResult compare_sides(const IdentityCase &c, Sides<BigInt> sides);

using Grid = std::map<std::string, std::vector<long>>;

struct IdentityDescriptor
{
    std::string id;
    IdentityKind kind = IdentityKind::q_polynomial;
    std::vector<std::string> params;
    Grid default_grid;
    std::function<CaseResult(const IdentityCase &)> check;
};

// Every identity, in a fixed order; ids are unique.
const std::vector<IdentityDescriptor> &registry();
// nullptr if unknown.
const IdentityDescriptor *find_descriptor(std::string_view id);

// Cartesian product over descriptor.params in lexicographic order of the
// value tuple. Parameters missing from the grid take the Params default.
std::vector<IdentityCase> expand_grid(const IdentityDescriptor &d, const Grid &grid);

// --- q-polynomial identities ------------------------------------------------
// ids: delta, result1..result6, resdbl1..resdbl4, corollary_2_4[_odd],
// corollary_3_4[_odd]. result3/result4 sides are doubled so the cosine weights
// are integers. Throw std::invalid_argument on unknown id or out-of-domain
// parameters (n, m, p, a >= 0; b, c >= 1).
Sides<IntPoly> q_identity_sides(std::string_view id, const Params &v);
CaseResult check_q_identity(const IdentityCase &c);

// --- partition-count identities ---------------------------------------------
// ids: theorem1, theorem2, theorem3, theorem6, theorem7, theorem8, theorem9,
// theorem_simple, qstar_relation, pn_from_q, qn_double_sum, pmost_chain,
// pnmp_correspondence, qnmp_correspondence. theorem6/theorem7 doubled.
Sides<BigInt> count_identity_sides(std::string_view id, const Params &v);
CaseResult check_count_identity(const IdentityCase &c);

// sine_vanishing_6 (X = P) and sine_vanishing_7 (X = Q): rhs is always zero.
Sides<BigInt> sine_vanishing_sides(std::string_view id, const Params &v);
CaseResult check_sine_vanishing(const IdentityCase &c);

// --- q = 1 combinatorial identities -----------------------------------------
// ids comb01..comb23; cosine-weighted ones (comb06..comb11)
// doubled.
inline constexpr int combinatorial_count = 23;
Sides<BigInt> combinatorial_sides(std::string_view id, const Params &v);
CaseResult check_combinatorial(const IdentityCase &c);

// --- generating functions ---------------------------------------------------
// Expands prod_{j<=p} 1/(1 - z q^j) and prod_{j<=p} (1 + z q^j) and compares
// every [q^n z^m], n <= q_order, m <= z_degree, with P(n,m,p) and Q(n,m,p).
CaseResult check_genfun(long p, std::size_t q_order, std::size_t z_degree, bool inject_failure = false);

// --- triangle sums ------------------------------------------------------------
struct FSequence
{
    std::vector<IntPoly> values;
};

enum class SignOn
{
    k,
    l,
};

// LHS: sum_{k+l<=n} (-1)^{k or l} F(k+l) q^{base C(k,2)} [m+1,k]_{q^base} [m+l,m]_{q^base};
// RHS: F(0). Throws std::invalid_argument if F is shorter than n + 1.
Sides<IntPoly> f_theorem_sides(const FSequence &F, long n, long m, SignOn sign, long base = 1);
CaseResult check_F_theorem(const FSequence &F, long n, long m, SignOn sign, long base = 1);

// F used by the registry's f_theorem_k / f_theorem_l: selector 0 gives F = delta,
// 1 gives F(j) = q^j, anything larger a seeded pseudo-random F of degree <= 3
// with coefficients in [-3, 3].
FSequence f_family(long selector, long n);

// F(j) = q^{a C(n-j,2)} [p+n-j, p]_{q^c} (resdbl1/2) or q^{a C(n-j,2)} [p, n-j]_{q^c}
// (resdbl3/4); with base = b the F-theorem then reproduces resdbl1..resdbl4.
FSequence resdbl_f_sequence(int which, const Params &v);

// Index maps on the triangle k, l >= 0, k + l <= n.
enum class TriangleMap
{
    swap_kl,   // (k, l) -> (l, k)
    reflect_l, // (k, l) -> (k, n - k - l)
};

// "swap" or "reflect"; throws std::invalid_argument otherwise.
TriangleMap parse_triangle_map(std::string_view name);

struct SignedTerm
{
    int sign = 1;
    IntPoly term;
};

// Summand of resdbl<which> at (k, l), split into its (-1)^{k or l} sign and the rest.
SignedTerm resdbl_summand(int which, const Params &v, long k, long l);

// Summand after substituting the maps in order: maps {t1, t2} evaluates the
// original summand at t1(t2(k, l)).
SignedTerm mapped_resdbl_summand(int which, const Params &v, const std::vector<TriangleMap> &maps, long k, long l);

// sum over the triangle of the mapped summand.
IntPoly resdbl_lhs(int which, const Params &v, const std::vector<TriangleMap> &maps = {});

enum class Combination
{
    even, // weight ((-1)^k + (-1)^l)/2, right side unchanged
    odd,  // weight ((-1)^k - (-1)^l)/2, right side zero
};

struct CorollaryDerivation
{
    std::string id;
    std::string base_id; // resdbl1..resdbl4
    // Binds the new identity's (n, m) to the base identity's parameters.
    std::function<Params(const Params &)> bind;
    std::vector<TriangleMap> first;  // must leave sign (-1)^k
    std::vector<TriangleMap> second; // must leave sign (-1)^l, same unsigned summand
    Combination combination = Combination::even;
};

// Throws std::invalid_argument if base_id is not resdbl1..resdbl4 or bind is empty.
// The returned descriptor verifies, per instance, that the two transformed
// summands pair up before comparing sides.
IdentityDescriptor derive_even_sum_corollary(const CorollaryDerivation &d);
Sides<IntPoly> derived_corollary_sides(const CorollaryDerivation &d, const Params &v);

// The two derivations shipped with the registry.
CorollaryDerivation corollary_2_4_derivation(Combination comb);
CorollaryDerivation corollary_3_4_derivation(Combination comb);

} // namespace qpartid

#endif
