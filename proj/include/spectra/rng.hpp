#pragma once

#include <cstdint>
#include <random>

namespace spectra::rng {

// splitmix64; used to derive independent per-trial seeds from (seed, index).
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Engine = std::mt19937_64;

inline Engine engine(std::uint64_t seed) { return Engine(seed); }

// The helpers below replace std::uniform_*_distribution, whose outputs are
// implementation-defined; same seed must mean same graphs on every platform.

inline std::uint64_t uniform_u64(Engine& g, std::uint64_t lo, std::uint64_t hi) {
    return lo + g() % (hi - lo + 1);  // modulo bias is irrelevant at test scales
}

inline int uniform_int(Engine& g, int lo, int hi) {
    return static_cast<int>(uniform_u64(g, 0, static_cast<std::uint64_t>(hi - lo))) + lo;
}

// Uniform in [0, 1).
inline double uniform01(Engine& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Engine& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

// Fisher-Yates shuffle with the deterministic index helper.
template <typename T>
void shuffle(Engine& g, std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(uniform_u64(g, 0, i - 1));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace spectra::rng
