#ifndef QPARTID_WEIGHTS_HPP
#define QPARTID_WEIGHTS_HPP

#include <array>
#include <cstddef>

namespace qpartid
{

namespace detail
{
constexpr long mod6(long j) noexcept
{
    const long r = j % 6;
    return r < 0 ? r + 6 : r;
}
} // namespace detail

// 2 cos(j pi / 3), an integer.
constexpr int twice_cos(long j) noexcept
{
    constexpr std::array<int, 6> table{2, 1, -1, -2, -1, 1};
    return table[static_cast<std::size_t>(detail::mod6(j))];
}

// 2 sin(j pi / 3) / sqrt(3), an integer.
constexpr int twice_sin_over_sqrt3(long j) noexcept
{
    constexpr std::array<int, 6> table{0, 1, 1, 0, -1, -1};
    return table[static_cast<std::size_t>(detail::mod6(j))];
}

// (-1)^j
constexpr int alt_sign(long j) noexcept
{
    return (j % 2 == 0) ? 1 : -1;
}

} // namespace qpartid

#endif
