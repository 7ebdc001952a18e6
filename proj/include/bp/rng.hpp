#pragma once

#include <cstdint>
#include <random>

namespace bp {

// splitmix64: used to key independent generator streams from (seed, stream)
// pairs so parallel work is reproducible regardless of execution order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0,
                                std::uint64_t substream = 0) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ splitmix64(stream + 0x51ed270b0a5cd9d3ULL));
    s = splitmix64(s ^ splitmix64(substream + 0x6a09e667f3bcc909ULL));
    return std::mt19937_64(s);
}

}  // namespace bp
