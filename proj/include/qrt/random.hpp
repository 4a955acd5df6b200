#pragma once

// Seedable random streams. The generator is std::mt19937_64; independent streams are
// derived from (seed, stream id) through SplitMix64 so that every stream is a pure
// function of the user seed.

#include "qrt/rational.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace qrt {

inline std::uint64_t splitmix64(std::uint64_t x)
{
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_stream(std::uint64_t seed, std::uint64_t stream)
{
        return Rng(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

/// Uniform integer in [0, bound) by rejection; independent of the standard library's
/// distribution implementations.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound)
{
        if (bound == 0)
                throw std::invalid_argument("uniform_below(0)");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        for (;;) {
                std::uint64_t x = rng();
                if (x < limit)
                        return x % bound;
        }
}

/// Uniform integer in [lo, hi].
inline long uniform_int(Rng &rng, long lo, long hi)
{
        return lo + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

} // namespace qrt
