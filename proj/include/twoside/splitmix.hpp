#pragma once

#include <cstdint>
#include <stdexcept>

namespace twoside {

/// splitmix64 with the usual constants; bit-reproducible everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, bound) by rejection above the largest multiple of bound.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound == 0)
            throw std::invalid_argument("empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x < limit)
                return x % bound;
        }
    }

    /// Uniform on [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

} // namespace twoside
