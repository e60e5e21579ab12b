#pragma once

#include <cstdint>

namespace hamcut {

// Deterministic stream generator used everywhere randomness is needed, so
// results are identical across platforms and standard-library versions.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// uniform in [0, 1)
inline double unit_double(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

// uniform integer in [lo, hi] (inclusive); lo <= hi
inline long uniform_long(std::uint64_t& state, long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(splitmix64(state) % span);
}

}  // namespace hamcut
