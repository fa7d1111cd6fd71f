#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace kadj {

// mt19937_64 is fully specified by the standard; combined with the explicit
// bounded draw below, every sampled object is reproducible from its seed.
using Rng = std::mt19937_64;

// splitmix64 step, used to derive independent per-sample seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform draw in [lo, hi] by rejection; avoids std::uniform_int_distribution,
// whose output sequence is implementation-defined.
inline long long bounded_int(Rng& rng, long long lo, long long hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = ~0ULL - (~0ULL % range) - 1;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return lo + static_cast<long long>(x % range);
}

// Fisher-Yates shuffle of 0..m-1.
inline std::vector<int> random_permutation(int m, Rng& rng) {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    for (int i = m - 1; i > 0; --i) {
        int j = static_cast<int>(bounded_int(rng, 0, i));
        std::swap(p[i], p[j]);
    }
    return p;
}

} // namespace kadj
