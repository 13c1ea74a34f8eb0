#include <qpartid/qbinom.hpp>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpartid
{

namespace
{

class GaussianMemo
{
public:
    // Requires 0 <= bottom <= top.
    IntPoly get(long top, long bottom)
    {
        if (bottom == 0 || bottom == top) {
            return IntPoly{1};
        }
        const Key key{top, bottom};
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) {
                return it->second;
            }
        }
        IntPoly value = get(top - 1, bottom - 1) + shift(get(top - 1, bottom), static_cast<std::size_t>(bottom));
        std::unique_lock lock(mutex_);
        return memo_.try_emplace(key, std::move(value)).first->second;
    }

private:
    using Key = std::pair<long, long>;

    std::shared_mutex mutex_;
    std::map<Key, IntPoly> memo_;
};

GaussianMemo &memo()
{
    static GaussianMemo instance;
    return instance;
}

} // namespace

IntPoly gaussian(long m, long p)
{
    if (m < 0 || p < 0) {
        throw std::invalid_argument("gaussian: m and p must be nonnegative");
    }
    return memo().get(m + p, m);
}

IntPoly gaussian_general(const GaussKey &key)
{
    if (key.base < 1) {
        throw std::invalid_argument("gaussian_general: base must be >= 1, got " + std::to_string(key.base));
    }
    if (key.top < 0 || key.bottom < 0 || key.bottom > key.top) {
        return {};
    }
    return substitute_power(memo().get(key.top, key.bottom), key.base);
}

long binom2(long k)
{
    if (k < 0) {
        throw std::invalid_argument("binom2: negative argument " + std::to_string(k));
    }
    return k * (k - 1) / 2;
}

bool gaussian_symmetry_check(long m, long p)
{
    return gaussian(m, p) == gaussian(p, m);
}

} // namespace qpartid
