#pragma once

#include <cstdint>

namespace bcsketch {

// Default master seed for reproducible runs; pass another seed to randomize.
inline constexpr std::uint64_t kDefaultSeed = 42;

// SplitMix64 finalizer: a bijective mix of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Keyed pseudo-random function: maps (key, x) to a uniform-looking 64-bit word.
constexpr std::uint64_t keyed_hash(std::uint64_t key, std::uint64_t x) noexcept {
    std::uint64_t h = mix64(x + 0x9e3779b97f4a7c15ULL);
    return mix64((h ^ key) + 0x9e3779b97f4a7c15ULL);
}

// Deterministic sub-seed for the index-th consumer of a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return keyed_hash(master, index);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t domain,
                                    std::uint64_t index) noexcept {
    return keyed_hash(keyed_hash(master, domain), index);
}

/**
 * SplitMix64 sequence generator (Steele, Lea & Flood). Small, fast, and
 * statistically solid for simulation use; not for cryptography.
 */
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Exactly uniform draw from [0, bound), bound >= 1. Lemire's
    // multiply-then-reject reduction; expected iterations ~1.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        std::uint64_t x = next();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t cutoff = (0 - bound) % bound;
            while (lo < cutoff) {
                x = next();
                m = static_cast<unsigned __int128>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform draw from the inclusive range [lo, hi].
    std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi) noexcept {
        return lo + next_below(hi - lo + 1);
    }

private:
    std::uint64_t state_;
};

}  // namespace bcsketch
