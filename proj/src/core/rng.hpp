#pragma once

#include <cstdint>
#include <random>

namespace lfcsim {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Seed for one named stream of a run. Distinct stream ids give statistically
// disjoint streams for the same run seed, so consuming draws on one channel
// never shifts another channel's sequence.
inline std::uint64_t stream_seed(std::uint64_t run_seed, std::uint64_t stream_id) {
    return splitmix64(run_seed ^ splitmix64(stream_id));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace lfcsim
