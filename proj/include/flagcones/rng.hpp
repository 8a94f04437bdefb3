#pragma once

#include <cstdint>

namespace flagcones {

/// splitmix64; deterministic across platforms so seeded runs byte-match.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        // rejection keeps it exactly uniform
        std::uint64_t limit = ~0ull - ~0ull % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
};

}  // namespace flagcones
