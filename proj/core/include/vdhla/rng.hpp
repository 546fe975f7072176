#pragma once

#include <cstdint>
#include <random>

namespace vdhla {

// One generator per trial; every stochastic draw of that trial (action
// sampling and environment responses alike) consumes from it, so a run is
// bit-reproducible from its seed.
using Rng = std::mt19937_64;

// splitmix64, used to spread user-facing seeds and to derive independent
// streams for parallel trials.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng{mix64(seed)}; }

inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

// Uniform double in [0,1), 53-bit resolution. Kept explicit instead of
// std::uniform_real_distribution so the draw sequence is pinned by the
// engine alone.
inline double next_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return next_double(rng) < p; }

// Uniform index in [0, n).
inline std::size_t next_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace vdhla
