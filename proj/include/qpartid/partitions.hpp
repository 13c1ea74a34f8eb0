#ifndef QPARTID_PARTITIONS_HPP
#define QPARTID_PARTITIONS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include <qpartid/bigpoly.hpp>

namespace qpartid
{

// Upper bound on the part size; nullopt means unbounded (represented
// internally as p = n, since no part of n can exceed n).
using PartCap = std::optional<long>;
inline constexpr PartCap unbounded = std::nullopt;

// Memoized exact counts
//   P(n, m, p): partitions of n into exactly m parts, each at most p,
//   Q(n, m, p): the same with distinct parts.
// Out-of-range arguments (any negative) count zero. Thread-safe.
class CountTable
{
public:
    BigInt P(long n, long m, PartCap p);
    BigInt Q(long n, long m, PartCap p);

    [[nodiscard]] std::size_t memo_size() const;

private:
    using Key = std::tuple<long, long, long>;

    BigInt p_rec(long n, long m, long p);
    BigInt q_rec(long n, long m, long p);

    mutable std::shared_mutex mutex_;
    std::map<Key, BigInt> memo_P_;
    std::map<Key, BigInt> memo_Q_;
};

// Process-wide table used by the free functions below.
CountTable &default_table();

BigInt count_P(long n, long m, PartCap p);
BigInt count_Q(long n, long m, PartCap p);
// At most m parts.
BigInt count_P_star(long n, long m, long p);
BigInt count_Q_star(long n, long m, long p);
// Any number of parts, each at most p.
BigInt count_P_most(long n, long p);
BigInt count_Q_most(long n, long p);
BigInt count_P_of(long n);
BigInt count_Q_of(long n);
// Exactly m parts, unbounded size.
BigInt count_P_nm(long n, long m);
BigInt count_Q_nm(long n, long m);

using Partition = std::vector<long>;

struct PartitionSpec
{
    long n = 0;
    std::optional<long> exact_parts;
    std::optional<long> max_parts;
    std::optional<long> max_part;
    bool distinct = false;
};

inline constexpr long default_oracle_limit = 30;

// Brute-force listing by recursive descent on the largest part, in
// reverse-lexicographic order; each partition is weakly decreasing (strictly
// for distinct). Shares nothing with the counting recurrences.
// Throws std::invalid_argument if spec.n exceeds oracle_limit, if both
// exact_parts and max_parts are set, or if n is negative.
std::vector<Partition> enumerate(const PartitionSpec &spec, long oracle_limit = default_oracle_limit);

// P*(n, m, p) == P(n + m, m, p + 1)
bool check_pnmp_correspondence(long n, long m, long p);
// Q(n, m, p) == P(n - m(m-1)/2, m, p - m + 1)
bool check_qnmp_correspondence(long n, long m, long p);

} // namespace qpartid

#endif
