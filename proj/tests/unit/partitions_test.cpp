#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <thread>

#include <qpartid/partitions.hpp>

using namespace qpartid;

namespace
{

std::size_t count(long n, std::optional<long> parts, std::optional<long> max_part, bool distinct)
{
    return enumerate({n, parts, std::nullopt, max_part, distinct}).size();
}

} // namespace

TEST(Counts, Examples)
{
    EXPECT_EQ(count_P(5, 2, 3), 1);
    EXPECT_EQ(count_P(4, 2, unbounded), 2);
    EXPECT_EQ(count_Q(6, 3, 3), 1);
    EXPECT_EQ(count_Q(5, 2, 4), 2);
    EXPECT_EQ(count_P_star(2, 2, 2), 2);
    EXPECT_EQ(count_Q_star(3, 2, 3), 2);
    EXPECT_EQ(count_P_of(5), 7);
    EXPECT_EQ(count_Q_of(5), 3);
    EXPECT_EQ(count_P_most(4, 2), 3);
    EXPECT_EQ(count_P(0, 0, 0), 1);
    EXPECT_EQ(count_Q(0, 0, 0), 1);
    EXPECT_EQ(count_P(3, 0, unbounded), 0);
    EXPECT_EQ(count_P(-1, 0, 0), 0);
}

TEST(Counts, KnownSequences)
{
    const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    const long q[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64};
    for (long n = 0; n <= 20; ++n) {
        EXPECT_EQ(count_P_of(n), p[n]) << n;
        EXPECT_EQ(count_Q_of(n), q[n]) << n;
    }
    EXPECT_EQ(count_P_of(100), BigInt("190569292"));
    EXPECT_EQ(count_Q_of(100), BigInt("444793"));
}

TEST(Counts, AgreeWithEnumeration)
{
    for (long n = 0; n <= 14; ++n) {
        for (long m = 0; m <= n; ++m) {
            for (long p = 0; p <= n; ++p) {
                EXPECT_EQ(count_P(n, m, p), count(n, m, p, false)) << n << ' ' << m << ' ' << p;
                EXPECT_EQ(count_Q(n, m, p), count(n, m, p, true)) << n << ' ' << m << ' ' << p;
            }
            EXPECT_EQ(count_P(n, m, unbounded), count(n, m, std::nullopt, false));
            EXPECT_EQ(count_Q(n, m, unbounded), count(n, m, std::nullopt, true));
        }
    }
}

TEST(Counts, ConjugationAndSaturation)
{
    for (long n = 0; n <= 20; ++n) {
        for (long m = 0; m <= n; ++m) {
            // P(n, m) is P(n, m, p) with p unbounded
            EXPECT_EQ(count_P_nm(n, m), count_P(n, m, unbounded));
            for (long p = 0; p <= n; ++p) {
                EXPECT_EQ(count_P_star(n, m, p), count_P_star(n, p, m));
            }
            EXPECT_EQ(count_P(n, m, n + 5), count_P(n, m, unbounded));
            if (2 * m >= n) {
                EXPECT_EQ(count_P(n, m, unbounded), count_P_of(n - m));
            }
        }
    }
    for (long n = 0; n <= 15; ++n) {
        for (long m = 0; m <= 15; ++m) {
            for (long p = 0; p <= 15; ++p) {
                EXPECT_TRUE(check_pnmp_correspondence(n, m, p));
                EXPECT_TRUE(check_qnmp_correspondence(n, m, p));
            }
        }
    }
}

TEST(Enumerate, OrderAndShape)
{
    const auto all = enumerate({5, std::nullopt, std::nullopt, std::nullopt, false});
    ASSERT_EQ(all.size(), 7u);
    EXPECT_EQ(all.front(), (Partition{5}));
    EXPECT_EQ(all.back(), (Partition{1, 1, 1, 1, 1}));
    for (const auto &part : all) {
        EXPECT_TRUE(std::is_sorted(part.rbegin(), part.rend()));
    }
    const auto distinct = enumerate({6, 3, std::nullopt, 3, true});
    ASSERT_EQ(distinct.size(), 1u);
    EXPECT_EQ(distinct.front(), (Partition{3, 2, 1}));
    EXPECT_EQ(enumerate({6, std::nullopt, 2, std::nullopt, false}).size(), 4u);
    EXPECT_EQ(enumerate({0, std::nullopt, std::nullopt, std::nullopt, false}).size(), 1u);
}

TEST(Enumerate, Errors)
{
    EXPECT_THROW(enumerate({31, std::nullopt, std::nullopt, std::nullopt, false}), std::invalid_argument);
    EXPECT_NO_THROW(enumerate({31, std::nullopt, std::nullopt, std::nullopt, false}, 31));
    EXPECT_THROW(enumerate({-1, std::nullopt, std::nullopt, std::nullopt, false}), std::invalid_argument);
    EXPECT_THROW(enumerate({4, 2, 2, std::nullopt, false}), std::invalid_argument);
}

TEST(CountTable, ConcurrentUseIsConsistent)
{
    CountTable table;
    std::vector<std::jthread> threads;
    std::vector<BigInt> got(8);
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] { got[t] = table.P(60, 10, 20) + table.Q(60, 6, unbounded); });
    }
    threads.clear();
    for (const auto &g : got) {
        EXPECT_EQ(g, count_P(60, 10, 20) + count_Q(60, 6, unbounded));
    }
    EXPECT_GT(table.memo_size(), 0u);
}
