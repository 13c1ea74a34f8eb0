#include <qpartid/partitions.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace qpartid
{

BigInt CountTable::P(long n, long m, PartCap p)
{
    return p_rec(n, m, p.value_or(std::max(n, 0L)));
}

BigInt CountTable::Q(long n, long m, PartCap p)
{
    return q_rec(n, m, p.value_or(std::max(n, 0L)));
}

std::size_t CountTable::memo_size() const
{
    std::shared_lock lock(mutex_);
    return memo_P_.size() + memo_Q_.size();
}

// P(n,m,p) = P(n-1,m-1,p) + P(n-m,m,p-1): either the smallest part is 1 (drop
// it) or every part is at least 2 (take 1 from each).
BigInt CountTable::p_rec(long n, long m, long p)
{
    if (n < 0 || m < 0 || p < 0) {
        return 0;
    }
    if (m == 0) {
        return n == 0 ? 1 : 0;
    }
    if (n < m || n > m * p) {
        return 0;
    }
    if (n == m || n == m * p) {
        return 1;
    }
    const Key key{n, m, p};
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_P_.find(key); it != memo_P_.end()) {
            return it->second;
        }
    }
    BigInt value = p_rec(n - 1, m - 1, p) + p_rec(n - m, m, p - 1);
    std::unique_lock lock(mutex_);
    return memo_P_.try_emplace(key, std::move(value)).first->second;
}

// Q(n,m,p) = Q(n,m,p-1) + Q(n-p,m-1,p-1): part p is either absent or present.
BigInt CountTable::q_rec(long n, long m, long p)
{
    if (n < 0 || m < 0 || p < 0) {
        return 0;
    }
    if (m == 0) {
        return n == 0 ? 1 : 0;
    }
    // m distinct parts <= p sum to between m(m+1)/2 and mp - m(m-1)/2
    if (m > p || 2 * n < m * (m + 1) || 2 * n > m * (2 * p - m + 1)) {
        return 0;
    }
    const Key key{n, m, p};
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_Q_.find(key); it != memo_Q_.end()) {
            return it->second;
        }
    }
    BigInt value = q_rec(n, m, p - 1) + q_rec(n - p, m - 1, p - 1);
    std::unique_lock lock(mutex_);
    return memo_Q_.try_emplace(key, std::move(value)).first->second;
}

CountTable &default_table()
{
    static CountTable table;
    return table;
}

BigInt count_P(long n, long m, PartCap p)
{
    return default_table().P(n, m, p);
}

BigInt count_Q(long n, long m, PartCap p)
{
    return default_table().Q(n, m, p);
}

BigInt count_P_star(long n, long m, long p)
{
    BigInt total = 0;
    for (long k = 0; k <= m; ++k) {
        total += count_P(n, k, p);
    }
    return total;
}

BigInt count_Q_star(long n, long m, long p)
{
    BigInt total = 0;
    for (long k = 0; k <= m; ++k) {
        total += count_Q(n, k, p);
    }
    return total;
}

BigInt count_P_most(long n, long p)
{
    return n < 0 ? BigInt(0) : count_P_star(n, n, p);
}

BigInt count_Q_most(long n, long p)
{
    return n < 0 ? BigInt(0) : count_Q_star(n, n, p);
}

BigInt count_P_of(long n)
{
    return count_P_most(n, std::max(n, 0L));
}

BigInt count_Q_of(long n)
{
    return count_Q_most(n, std::max(n, 0L));
}

BigInt count_P_nm(long n, long m)
{
    return count_P(n, m, unbounded);
}

BigInt count_Q_nm(long n, long m)
{
    return count_Q(n, m, unbounded);
}

namespace
{

struct Enumerator
{
    const PartitionSpec &spec;
    std::optional<long> part_limit; // on the number of parts
    std::vector<Partition> out;
    Partition current;

    void descend(long remaining, long largest_allowed)
    {
        if (remaining == 0) {
            if (!spec.exact_parts || static_cast<long>(current.size()) == *spec.exact_parts) {
                out.push_back(current);
            }
            return;
        }
        if (part_limit && static_cast<long>(current.size()) >= *part_limit) {
            return;
        }
        for (long part = std::min(remaining, largest_allowed); part >= 1; --part) {
            current.push_back(part);
            descend(remaining - part, spec.distinct ? part - 1 : part);
            current.pop_back();
        }
    }
};

} // namespace

std::vector<Partition> enumerate(const PartitionSpec &spec, long oracle_limit)
{
    if (spec.n < 0) {
        throw std::invalid_argument("enumerate: n must be nonnegative");
    }
    if (spec.n > oracle_limit) {
        throw std::invalid_argument("enumerate: n = " + std::to_string(spec.n) + " exceeds oracle limit "
                                    + std::to_string(oracle_limit));
    }
    if (spec.exact_parts && spec.max_parts) {
        throw std::invalid_argument("enumerate: exact_parts and max_parts are mutually exclusive");
    }
    if ((spec.exact_parts && *spec.exact_parts < 0) || (spec.max_parts && *spec.max_parts < 0)
        || (spec.max_part && *spec.max_part < 0)) {
        return {};
    }
    Enumerator e{spec, spec.exact_parts ? spec.exact_parts : spec.max_parts, {}, {}};
    e.descend(spec.n, spec.max_part.value_or(spec.n));
    return std::move(e.out);
}

bool check_pnmp_correspondence(long n, long m, long p)
{
    return count_P_star(n, m, p) == count_P(n + m, m, p + 1);
}

bool check_qnmp_correspondence(long n, long m, long p)
{
    return count_Q(n, m, p) == count_P(n - m * (m - 1) / 2, m, p - m + 1);
}

} // namespace qpartid
